#include "fundreg/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace fundreg {

// --- intervals -------------------------------------------------------------

bool Interval::contains(const Rational& t) const {
  const bool above = lo < t || (lo == t && lo_closed);
  const bool below = t < hi || (t == hi && hi_closed);
  return above && below;
}

namespace {

bool nonempty(const Interval& i) { return i.lo < i.hi || (i.lo == i.hi && i.lo_closed && i.hi_closed); }

std::vector<Interval> normalize(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return !nonempty(i); });
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> merged;
  for (const auto& next : pieces) {
    if (!merged.empty()) {
      auto& cur = merged.back();
      const bool touching = next.lo < cur.hi || (next.lo == cur.hi && (cur.hi_closed || next.lo_closed));
      if (touching) {
        if (next.lo == cur.lo) cur.lo_closed = cur.lo_closed || next.lo_closed;
        if (cur.hi < next.hi) {
          cur.hi = next.hi;
          cur.hi_closed = next.hi_closed;
        } else if (cur.hi == next.hi) {
          cur.hi_closed = cur.hi_closed || next.hi_closed;
        }
        continue;
      }
    }
    merged.push_back(next);
  }
  return merged;
}

Interval meet(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo > b.lo) {
    out.lo = a.lo, out.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    out.lo = b.lo, out.lo_closed = b.lo_closed;
  } else {
    out.lo = a.lo, out.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    out.hi = a.hi, out.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    out.hi = b.hi, out.hi_closed = b.hi_closed;
  } else {
    out.hi = a.hi, out.hi_closed = a.hi_closed && b.hi_closed;
  }
  return out;
}

bool inside(const Interval& a, const Interval& b) {
  const bool lo_ok = b.lo < a.lo || (b.lo == a.lo && (b.lo_closed || !a.lo_closed));
  const bool hi_ok = a.hi < b.hi || (a.hi == b.hi && (b.hi_closed || !a.hi_closed));
  return lo_ok && hi_ok;
}

// True when a ends before b could start contributing to any later overlap.
bool ends_before_end(const Interval& a, const Interval& b) {
  return a.hi < b.hi || (a.hi == b.hi && !a.hi_closed);
}

}  // namespace

IntervalSet::IntervalSet(std::initializer_list<Interval> pieces)
    : pieces_(normalize(std::vector<Interval>(pieces))) {}

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(normalize(std::move(pieces))) {}

bool IntervalSet::contains(const Rational& t) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Interval& i) { return i.contains(t); });
}

Rational IntervalSet::infimum() const {
  if (pieces_.empty()) throw std::logic_error("infimum of empty set");
  return pieces_.front().lo;
}

Rational IntervalSet::supremum() const {
  if (pieces_.empty()) throw std::logic_error("supremum of empty set");
  return pieces_.back().hi;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return IntervalSet(std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& x = a.components();
  const auto& y = b.components();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const Interval m = meet(x[i], y[j]);
    if (nonempty(m)) out.push_back(m);
    if (ends_before_end(x[i], y[j]))
      ++i;
    else
      ++j;
  }
  return IntervalSet(std::move(out));
}

bool intersects(const IntervalSet& a, const IntervalSet& b) { return !intersect(a, b).empty(); }

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  // A connected piece of a lies in b only if it lies in the first component of b
  // reaching its right end.
  const auto& y = b.components();
  std::size_t j = 0;
  for (const auto& piece : a.components()) {
    while (j < y.size() && (y[j].hi < piece.hi || (y[j].hi == piece.hi && !y[j].hi_closed && piece.hi_closed))) ++j;
    if (j == y.size() || !inside(piece, y[j])) return false;
  }
  return true;
}

IntervalSet translate(const IntervalSet& s, const Rational& shift) {
  std::vector<Interval> out = s.components();
  for (auto& i : out) {
    i.lo += shift;
    i.hi += shift;
  }
  return IntervalSet(std::move(out));
}

IntervalSet translate(const IntervalSet& s, std::int64_t m) { return translate(s, Rational(m)); }

IntervalSet closure(const IntervalSet& s) {
  std::vector<Interval> out = s.components();
  for (auto& i : out) i.lo_closed = i.hi_closed = true;
  return IntervalSet(std::move(out));
}

IntervalSet interior(const IntervalSet& s) {
  std::vector<Interval> out;
  for (auto i : s.components()) {
    if (i.lo == i.hi) continue;
    i.lo_closed = i.hi_closed = false;
    out.push_back(i);
  }
  return IntervalSet(std::move(out));
}

IntervalSet boundary(const IntervalSet& s) {
  std::vector<Interval> out;
  for (const auto& i : s.components()) {
    out.push_back(Interval::point(i.lo));
    out.push_back(Interval::point(i.hi));
  }
  return IntervalSet(std::move(out));
}

std::string to_string(const Interval& i) {
  if (i.lo == i.hi) return "{" + to_string(i.lo) + "}";
  return std::string(i.lo_closed ? "[" : "(") + to_string(i.lo) + ", " + to_string(i.hi) + (i.hi_closed ? "]" : ")");
}

std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& i : s.components()) {
    if (!out.empty()) out += " U ";
    out += to_string(i);
  }
  return out;
}

nlohmann::json to_json(const IntervalSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& i : s.components())
    arr.push_back({{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}, {"lo_closed", i.lo_closed},
                   {"hi_closed", i.hi_closed}});
  return arr;
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
  std::vector<Interval> pieces;
  for (const auto& e : j)
    pieces.push_back({parse_rational(e.at("lo").get<std::string>()), parse_rational(e.at("hi").get<std::string>()),
                      e.value("lo_closed", false), e.value("hi_closed", false)});
  return IntervalSet(std::move(pieces));
}

// --- region descriptors ----------------------------------------------------

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Free2House: return "free2house";
    case RegionKind::Line1DPathological: return "line-pathological";
    case RegionKind::Line1DStandard: return "line-standard";
    case RegionKind::Plane2DPathological: return "plane-pathological";
    case RegionKind::Cylinder: return "cylinder";
  }
  return "?";
}

RegionKind parse_region_kind(const std::string& text) {
  for (auto k : {RegionKind::Free2House, RegionKind::Line1DPathological, RegionKind::Line1DStandard,
                 RegionKind::Plane2DPathological, RegionKind::Cylinder})
    if (to_string(k) == text) return k;
  throw std::invalid_argument("unknown region kind '" + text + "'");
}

nlohmann::json to_json(const RegionSpec& spec) {
  nlohmann::json j{{"kind", to_string(spec.kind)}};
  if (spec.kind == RegionKind::Line1DPathological) j["intervals"] = spec.intervals;
  if (spec.kind == RegionKind::Cylinder) {
    j["shift"] = to_string(spec.shift);
    j["compact_factor"] = spec.compact_factor;
  }
  return j;
}

RegionSpec region_spec_from_json(const nlohmann::json& j) {
  RegionSpec spec;
  spec.kind = parse_region_kind(j.at("kind").get<std::string>());
  if (j.contains("intervals")) spec.intervals = j.at("intervals").get<std::int64_t>();
  if (j.contains("shift")) spec.shift = parse_rational(j.at("shift").get<std::string>());
  if (j.contains("compact_factor")) spec.compact_factor = j.at("compact_factor").get<bool>();
  if (spec.kind == RegionKind::Cylinder && spec.shift <= 0)
    throw std::invalid_argument("cylinder shift must be positive");
  if (spec.kind == RegionKind::Line1DPathological && spec.intervals < 1)
    throw std::invalid_argument("pathological region needs at least one interval");
  return spec;
}

// --- free-2-house ----------------------------------------------------------

std::map<Word, Cell> region_cells(const RegionSpec& spec, unsigned radius) {
  if (spec.kind != RegionKind::Free2House) throw std::invalid_argument("region_cells expects a free2house spec");
  std::map<Word, Cell> cells;
  for (auto& w : enumerate_ball(radius))
    cells.emplace(w, w.is_r_power() ? Cell::OpenUpperTriangle : Cell::Empty);
  return cells;
}

AtomSet free2house_region(unsigned radius) {
  AtomSet out;
  const auto n = static_cast<std::int64_t>(radius);
  for (std::int64_t i = -n; i <= n; ++i) out.insert({Word::r_power(i), AtomKind::UpperFace});
  return out;
}

bool in_free2house_region(const Atom& a) { return a.kind == AtomKind::UpperFace && a.room.is_r_power(); }

bool in_free2house_closure(const Atom& a) {
  switch (a.kind) {
    case AtomKind::UpperFace:
    case AtomKind::Diagonal:
    case AtomKind::LeftWall: return a.room.is_r_power();
    case AtomKind::BottomWall: {
      // Top edge of the triangle in room r^i is the bottom wall of r^i u.
      const auto& letters = a.room.letters();
      if (letters.empty() || letters.back() != Generator::u) return false;
      return Word(std::span(letters.data(), letters.size() - 1)).is_r_power();
    }
    case AtomKind::LowerFace: return false;
  }
  return false;
}

// --- line and plane examples -----------------------------------------------

IntervalSet pathological_1d(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("pathological_1d needs N >= 1");
  std::vector<Interval> pieces;
  pieces.reserve(static_cast<std::size_t>(N));
  for (std::int64_t n = 0; n < N; ++n)
    pieces.push_back(Interval::open(Rational(n) + Rational(n, n + 1), Rational(n) + Rational(n + 1, n + 2)));
  return IntervalSet(std::move(pieces));
}

bool plane2d_membership(const Rational& x, const Rational& y) {
  if (x == Rational(0)) throw std::domain_error("outside chart");
  if (!(0 < x && x < 1)) return false;
  const Rational inv = 1 / x;
  return inv < y && y < inv + 1;
}

std::vector<std::int64_t> cylinder_overlap_set(const Rational& c, std::optional<Rational> lo,
                                               std::optional<Rational> hi) {
  if (c <= 0) throw std::invalid_argument("cylinder shift must be positive");
  const Rational a = lo.value_or(-c);
  const Rational b = hi.value_or(2 * c);
  if (!(a < b)) throw std::invalid_argument("empty band");
  // (mc + a, mc + b) meets (a, b) iff |m| c < b - a.
  const Rational q = (b - a) / c;
  const std::int64_t m_max = q.denominator() == 1 ? q.numerator() - 1 : floor(q);
  std::vector<std::int64_t> out;
  for (std::int64_t m = -m_max; m <= m_max; ++m) out.push_back(m);
  return out;
}

}  // namespace fundreg
