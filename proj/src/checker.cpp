#include "fundreg/checker.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace fundreg {

namespace detail {

bool stable_tail(const std::vector<std::size_t>& counts, std::size_t window) {
  if (window == 0 || counts.size() < window) return false;
  return std::all_of(counts.end() - static_cast<std::ptrdiff_t>(window), counts.end(),
                     [&](std::size_t c) { return c == counts.back(); });
}

bool strictly_increasing(const std::vector<std::size_t>& counts) {
  return std::adjacent_find(counts.begin(), counts.end(), std::greater_equal<>{}) == counts.end();
}

}  // namespace detail

std::vector<Rational> farey_points(std::int64_t max_denominator) {
  std::set<Rational> values;
  for (std::int64_t q = 1; q <= max_denominator; ++q)
    for (std::int64_t a = 0; a <= q; ++a) values.insert(Rational(a, q));
  return {values.begin(), values.end()};
}

nlohmann::json to_json(const QuotientDescription& q) {
  nlohmann::json gluings = nlohmann::json::array();
  for (const auto& g : q.gluings)
    gluings.push_back({{"from", g.from},
                       {"to", g.to},
                       {"element", g.element},
                       {"orientation", g.orientation_preserving ? "preserving" : "reversing"}});
  return {{"system", q.system},
          {"pieces", q.pieces},
          {"gluings", gluings},
          {"free_edges", q.free_edges},
          {"report", to_json(q.report)}};
}

namespace {

struct PointLess {
  bool operator()(const RoomPoint& a, const RoomPoint& b) const {
    return std::tie(a.room, a.x, a.y) < std::tie(b.room, b.x, b.y);
  }
};
using PointSet = std::set<RoomPoint, PointLess>;

/// Edge of closure(R) carrying the boundary cell, named by its triangle.
std::string edge_name(const Atom& a) {
  std::int64_t i = 0;
  switch (a.kind) {
    case AtomKind::Diagonal:
      if (a.room.is_r_power(&i)) return "diagonal[" + std::to_string(i) + "]";
      break;
    case AtomKind::LeftWall:
      if (a.room.is_r_power(&i)) return "left[" + std::to_string(i) + "]";
      break;
    case AtomKind::BottomWall: {
      const Word below = concat(a.room, Word{Generator::u_inv});
      if (below.is_r_power(&i)) return "top[" + std::to_string(i) + "]";
      break;
    }
    default: break;
  }
  return to_string(a);
}

/// Point of the edge `a` at parameter t, measured from the corner nearest the
/// origin of the triangle's room.
RoomPoint edge_point(const Atom& a, const Rational& t) {
  switch (a.kind) {
    case AtomKind::Diagonal: return canonicalize(a.room, t, t);
    case AtomKind::LeftWall: return canonicalize(a.room, Rational(0), t);
    case AtomKind::BottomWall: return canonicalize(a.room, t, Rational(0));
    default: throw std::invalid_argument("not an edge cell");
  }
}

/// Parameter of a point lying on edge `a`.
Rational edge_parameter(const Atom& a, const RoomPoint& p) { return a.kind == AtomKind::LeftWall ? p.y : p.x; }

/// The expected class of a point of closure(R) under the strip gluing.
PointSet strip_class(const RoomPoint& q, unsigned radius) {
  PointSet out{q};
  const Atom a = atom_of(q);
  std::int64_t i = 0;
  const auto r = static_cast<std::int64_t>(radius);
  if (a.kind == AtomKind::BottomWall && concat(a.room, Word{Generator::u_inv}).is_r_power(&i)) {
    if (std::abs(i + 1) <= r) out.insert(canonicalize(Word::r_power(i + 1), Rational(0), q.x));
  } else if (a.kind == AtomKind::LeftWall && a.room.is_r_power(&i)) {
    if (std::abs(i - 1) <= r) out.insert(canonicalize(Word::r_power(i - 1), q.y, Rational(1)));
  }
  return out;
}

}  // namespace

QuotientDescription quotient_build(const Free2HouseSystem& sys, unsigned depth, unsigned radius) {
  QuotientDescription q;
  q.system = sys.name();
  const AtomSet R = sys.region(radius);
  const AtomSet bar = closure(R);
  const AtomSet edge = boundary(R);
  const auto r = static_cast<std::int64_t>(radius);
  for (std::int64_t i = -r; i <= r; ++i) q.pieces.push_back("triangle[" + std::to_string(i) + "]");

  const auto ball = sys.group_ball(depth);
  const ActionElement id = ActionElement::identity();
  std::vector<ActionElement> overlap;
  for (const auto& g : ball)
    if (!(g == id) && intersects(act(g, bar), bar)) overlap.push_back(g);

  const std::vector<Rational> params = farey_points();
  std::set<std::string> free_edges;
  for (const auto& g : overlap) {
    for (const Atom& a : edge) {
      const Atom b = act(g, a);
      if (!edge.contains(b)) continue;
      if (a == b) {
        const bool fixed = std::all_of(params.begin() + 1, params.end() - 1, [&](const Rational& t) {
          const RoomPoint p = edge_point(a, t);
          return apply_point(g, p) == p;
        });
        if (fixed) free_edges.insert(edge_name(a));
        continue;
      }
      if (a.kind != AtomKind::BottomWall) continue;  // record each gluing once, from the top edge
      bool preserving = true;
      bool reversing = true;
      for (auto t = params.begin() + 1; t + 1 != params.end(); ++t) {
        const Rational s = edge_parameter(b, apply_point(g, edge_point(a, *t)));
        preserving = preserving && s == *t;
        reversing = reversing && s == 1 - *t;
      }
      if (!preserving && !reversing) throw std::logic_error("edge gluing is not affine in the edge parameter");
      q.gluings.push_back({edge_name(a), edge_name(b), sys.label(g), preserving});
    }
  }
  q.free_edges.assign(free_edges.begin(), free_edges.end());

  // Representative uniqueness: every sample point has its orbit meet closure(R)
  // in exactly one gluing class.
  VerificationReport& rep = q.report;
  rep = {"quotient-representatives", Verdict::Verified, depth, radius};
  const unsigned sample_radius = std::min(radius, 2u);
  std::vector<std::pair<Word, std::pair<Rational, Rational>>> samples;
  for (const Word& room : enumerate_ball(sample_radius))
    for (const Rational& x : params)
      for (const Rational& y : params)
        if (x < 1 && y < 1 && !(x == Rational(0) && y == Rational(0))) samples.push_back({room, {x, y}});

  std::vector<char> ok(samples.size(), 0);
  parallel_for(samples.size(), [&](std::size_t k) {
    const auto& [room, xy] = samples[k];
    const RoomPoint p = canonicalize(room, xy.first, xy.second);
    const SpineWalk walk = walk_to_spine(p.room);
    RoomPoint rep_point = apply_point(walk.element, p);
    if (!bar.contains(atom_of(rep_point)))
      rep_point = apply_point(make_generator(Word::r_power(walk.index)), rep_point);
    if (!bar.contains(atom_of(rep_point))) return;
    PointSet found{rep_point};
    for (const auto& g : overlap) {
      const RoomPoint img = apply_point(g, rep_point);
      if (bar.contains(atom_of(img))) found.insert(img);
    }
    ok[k] = found == strip_class(rep_point, radius) ? 1 : 0;
  });
  const auto bad = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
  rep.counts.push_back({{"samples", samples.size()}, {"overlap_elements", overlap.size()}, {"mismatches", bad}});
  if (bad > 0) {
    rep.verdict = Verdict::Refuted;
    const auto at = static_cast<std::size_t>(std::find(ok.begin(), ok.end(), 0) - ok.begin());
    rep.witnesses.push_back(to_string(canonicalize(samples[at].first, samples[at].second.first,
                                                   samples[at].second.second)));
  }
  return q;
}

QuotientDescription quotient_build(const LineSystem& sys, unsigned depth, unsigned radius) {
  QuotientDescription q;
  q.system = sys.name();
  const IntervalSet bar = closure(sys.region(radius));
  if (bar.size() != 1) throw std::invalid_argument("quotient needs a connected closure");
  const IntervalSet edge = boundary(sys.region(radius));
  const Rational a = bar.infimum();
  const Rational b = bar.supremum();
  q.pieces.push_back(to_string(bar));
  const auto ball = sys.group_ball(depth);
  for (std::int64_t m : ball) {
    if (m == 0) continue;
    const IntervalSet moved = intersect(sys.act(m, IntervalSet{Interval::point(a)}), edge);
    if (!moved.empty()) q.gluings.push_back({to_string(a), to_string(moved.infimum()), sys.label(m), true});
  }

  VerificationReport& rep = q.report;
  rep = {"quotient-representatives", Verdict::Verified, depth, radius};
  const auto points = sys.sample_points(radius);
  std::size_t bad = 0;
  std::optional<Rational> witness;
  for (const auto& pt : points) {
    const Rational p = pt.infimum();
    std::set<Rational> found;
    for (std::int64_t m : ball) {
      const Rational img = p + sys.step() * m;
      if (bar.contains(img)) found.insert(img);
    }
    const Rational base = p - sys.step() * floor((p - a) / sys.step());
    std::set<Rational> expected{base};
    if (base == a) expected.insert(b);
    if (found != expected) {
      ++bad;
      if (!witness) witness = p;
    }
  }
  rep.counts.push_back({{"samples", points.size()}, {"mismatches", bad}});
  if (bad > 0) {
    rep.verdict = Verdict::Refuted;
    rep.witnesses.push_back(to_string(*witness));
  }
  return q;
}

std::vector<std::pair<Word, Cell>> fixed_point_search(const ActionElement& g, unsigned radius) {
  std::vector<std::pair<Word, Cell>> out;
  for (const Word& v : enumerate_ball(radius))
    if (apply_word(g, v) == v) out.emplace_back(v, g.parity ? Cell::Diagonal : Cell::ClosedBox);
  return out;
}

VerificationReport plane_pathological_disjointness(std::int64_t bound) {
  VerificationReport rep{"disjointness", Verdict::Verified, static_cast<unsigned>(bound), 16};
  std::size_t samples = 0;
  std::size_t checks = 0;
  for (std::int64_t q = 2; q <= 16; ++q) {
    for (std::int64_t a = 1; a < q; ++a) {
      const Rational x(a, q);
      if (x.denominator() != q) continue;
      for (std::int64_t j = 1; j < 16; ++j) {
        const Rational y = 1 / x + Rational(j, 16);
        if (!plane2d_membership(x, y)) throw std::logic_error("sample outside region");
        ++samples;
        for (std::int64_t m = -bound; m <= bound; ++m)
          for (std::int64_t n = -bound; n <= bound; ++n) {
            if (m == 0 && n == 0) continue;
            ++checks;
            if (plane2d_membership(x + m, y + n) && rep.verdict == Verdict::Verified) {
              rep.verdict = Verdict::Refuted;
              rep.witnesses.push_back({{"point", {to_string(x), to_string(y)}}, {"translate", {m, n}}});
            }
          }
      }
    }
  }
  rep.counts.push_back({{"samples", samples}, {"translates_checked", checks}});
  return rep;
}

VerificationReport plane_pathological_unbounded(std::int64_t max_height) {
  VerificationReport rep{"bounded-closure", Verdict::Inconclusive, 0, static_cast<unsigned>(max_height)};
  std::size_t found = 0;
  for (std::int64_t Y = 1; Y <= max_height; ++Y) {
    const Rational x(1, Y + 1);
    const Rational y = Rational(Y + 1) + Rational(1, 2);
    if (plane2d_membership(x, y) && y > Y) {
      ++found;
      if ((Y & (Y - 1)) == 0) rep.witnesses.push_back({{"height", Y}, {"point", {to_string(x), to_string(y)}}});
    }
  }
  rep.counts.push_back({{"heights", max_height}, {"exceeded", found}});
  if (found == static_cast<std::size_t>(max_height)) rep.verdict = Verdict::Refuted;
  return rep;
}

}  // namespace fundreg
