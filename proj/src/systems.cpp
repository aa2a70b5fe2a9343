#include "fundreg/systems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fundreg {

std::vector<ActionElement> Free2HouseSystem::group_ball(unsigned depth) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->balls.find(depth);
  if (it == cache_->balls.end()) it = cache_->balls.emplace(depth, enumerate_weighted_ball(depth)).first;
  return it->second;
}

CoverCertificate coverage_certificate(const Atom& a) {
  CoverCertificate cert{a, walk_to_spine(a.room), false, ActionElement::identity()};
  const Atom moved = act(cert.walk.element, a);
  if (in_free2house_closure(moved)) {
    cert.element = invert(cert.walk.element);
    return cert;
  }
  // g_{r^i} fixes room r^i and swaps its two triangles.
  const ActionElement flip = make_generator(Word::r_power(cert.walk.index));
  cert.needs_spine_reflection = true;
  cert.element = invert(compose(flip, cert.walk.element));
  return cert;
}

std::vector<ActionElement> Free2HouseSystem::cover_elements(unsigned, unsigned radius) const {
  std::set<ActionElement> out;
  for (const Atom& a : truncated_space(radius)) out.insert(coverage_certificate(a).element);
  return {out.begin(), out.end()};
}

Rational Free2HouseSystem::extent(unsigned radius) const {
  std::set<Word> rooms;
  for (const Atom& a : fundreg::closure(region(radius))) rooms.insert(a.room);
  return Rational(static_cast<std::int64_t>(rooms.size()));
}

std::vector<AtomSet> Free2HouseSystem::sample_points(unsigned radius) const {
  std::vector<AtomSet> out;
  for (const Atom& a : truncated_space(radius)) out.push_back(AtomSet{a});
  return out;
}

LineSystem LineSystem::standard() {
  return {"line-standard", IntervalSet{Interval::open(Rational(0), Rational(1))}, Rational(1), false, true};
}

LineSystem LineSystem::pathological() {
  return {"line-pathological", IntervalSet{}, Rational(1), true, true};
}

LineSystem LineSystem::cylinder(Rational c, bool compact_factor) {
  if (c <= 0) throw std::invalid_argument("cylinder shift must be positive");
  return {"cylinder", IntervalSet{Interval::open(Rational(0), c)}, c, false, compact_factor};
}

LineSystem LineSystem::custom(std::string name, IntervalSet region, Rational step) {
  if (step <= 0) throw std::invalid_argument("translation step must be positive");
  return {std::move(name), std::move(region), step, false, true};
}

std::vector<std::int64_t> LineSystem::group_ball(unsigned depth) const {
  std::vector<std::int64_t> out;
  const auto d = static_cast<std::int64_t>(depth);
  for (std::int64_t m = -d; m <= d; ++m) out.push_back(m);
  return out;
}

IntervalSet LineSystem::region(unsigned radius) const {
  if (pathological_) return pathological_1d(std::max<std::int64_t>(1, radius));
  return base_;
}

IntervalSet LineSystem::space(unsigned radius) const {
  const Rational r = step_ * static_cast<std::int64_t>(radius);
  return IntervalSet{Interval::closed(-r, r)};
}

Rational LineSystem::extent(unsigned radius) const {
  const IntervalSet bar = fundreg::closure(region(radius));
  if (bar.empty()) return Rational(0);
  return bar.supremum() - bar.infimum();
}

std::vector<IntervalSet> LineSystem::sample_points(unsigned radius) const {
  std::set<Rational> values;
  const auto r = static_cast<std::int64_t>(radius);
  for (std::int64_t q = 1; q <= 16; ++q)
    for (std::int64_t a = -r * q; a <= r * q; ++a) values.insert(Rational(a, q) * step_);
  std::vector<IntervalSet> out;
  for (const Rational& v : values) out.push_back(IntervalSet{Interval::point(v)});
  return out;
}

}  // namespace fundreg
