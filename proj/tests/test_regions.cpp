#include <gtest/gtest.h>

#include <random>

#include "fundreg/regions.hpp"

using namespace fundreg;

namespace {

Interval random_interval(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> end(-12, 12);
  std::bernoulli_distribution coin(0.5);
  int a = end(rng), b = end(rng);
  if (a > b) std::swap(a, b);
  if (a == b) return Interval::point(Rational(a, 4));
  return {Rational(a, 4), Rational(b, 4), coin(rng), coin(rng)};
}

IntervalSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 4);
  std::vector<Interval> pieces;
  for (int k = count(rng); k > 0; --k) pieces.push_back(random_interval(rng));
  return IntervalSet(pieces);
}

// Probe points at every multiple of 1/8 in [-4, 4]: all endpoints and midpoints.
std::vector<Rational> probes() {
  std::vector<Rational> out;
  for (int k = -32; k <= 32; ++k) out.push_back(Rational(k, 8));
  return out;
}

}  // namespace

TEST(Intervals, NormalizationMerges) {
  const IntervalSet s{Interval::open(Rational(0), Rational(1)), Interval::closed(Rational(1), Rational(2))};
  ASSERT_EQ(s.size(), 1u);
  EXPECT_FALSE(s.components()[0].lo_closed);
  EXPECT_TRUE(s.components()[0].hi_closed);
  const IntervalSet gap{Interval::open(Rational(0), Rational(1)), Interval::open(Rational(1), Rational(2))};
  EXPECT_EQ(gap.size(), 2u);
  EXPECT_EQ(IntervalSet{Interval::open(Rational(1), Rational(1))}.size(), 0u);
}

TEST(Intervals, SetOperationsMatchPointwiseOracle) {
  std::mt19937_64 rng(41);
  const auto pts = probes();
  for (int k = 0; k < 500; ++k) {
    const IntervalSet a = random_set(rng), b = random_set(rng);
    const IntervalSet u = unite(a, b), i = intersect(a, b);
    bool any = false, sub = true;
    for (const Rational& t : pts) {
      EXPECT_EQ(u.contains(t), a.contains(t) || b.contains(t));
      EXPECT_EQ(i.contains(t), a.contains(t) && b.contains(t));
      any = any || (a.contains(t) && b.contains(t));
      sub = sub && (!a.contains(t) || b.contains(t));
      EXPECT_EQ(translate(a, Rational(1, 8)).contains(t + Rational(1, 8)), a.contains(t));
    }
    EXPECT_EQ(intersects(a, b), any);
    EXPECT_EQ(is_subset(a, b), sub);
  }
}

TEST(Intervals, Topology) {
  std::mt19937_64 rng(43);
  const auto pts = probes();
  const Rational eps(1, 1024);
  for (int k = 0; k < 300; ++k) {
    const IntervalSet a = random_set(rng);
    const IntervalSet bar = closure(a), in = interior(a), edge = boundary(a);
    for (const Rational& t : pts) {
      const bool left = a.contains(t - eps), right = a.contains(t + eps), here = a.contains(t);
      EXPECT_EQ(bar.contains(t), here || left || right);
      EXPECT_EQ(in.contains(t), here && left && right);
      EXPECT_EQ(edge.contains(t), bar.contains(t) && !in.contains(t));
    }
  }
  EXPECT_EQ(to_string(boundary(IntervalSet{Interval::open(Rational(0), Rational(1))})), "{0} U {1}");
}

TEST(Intervals, JsonRoundTrip) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 100; ++k) {
    const IntervalSet a = random_set(rng);
    EXPECT_EQ(interval_set_from_json(to_json(a)), a);
  }
}

TEST(Pathological, TranslatesAreDisjoint) {
  const IntervalSet R = pathological_1d(200);
  EXPECT_EQ(R.size(), 200u);
  for (std::int64_t m = -200; m <= 200; ++m)
    if (m != 0) EXPECT_FALSE(intersects(R, translate(R, m))) << m;
  EXPECT_THROW(pathological_1d(0), std::invalid_argument);
}

TEST(Pathological, ClosuresModuloZFillAnInitialSegment) {
  for (std::int64_t N = 1; N <= 30; ++N) {
    const IntervalSet bar = closure(pathological_1d(N));
    IntervalSet folded;
    for (const Interval& piece : bar.components()) folded = unite(folded, translate(IntervalSet{piece}, -floor(piece.lo)));
    EXPECT_EQ(folded, (IntervalSet{Interval::closed(Rational(0), Rational(N, N + 1))})) << N;
  }
}

TEST(Plane, Membership) {
  EXPECT_TRUE(plane2d_membership(Rational(1, 2), Rational(5, 2)));
  EXPECT_FALSE(plane2d_membership(Rational(1, 2), Rational(2)));
  EXPECT_FALSE(plane2d_membership(Rational(3, 2), Rational(1)));
  EXPECT_THROW(plane2d_membership(Rational(0), Rational(1)), std::domain_error);
}

TEST(Cylinder, OverlapSet) {
  const std::vector<std::int64_t> expected{-2, -1, 0, 1, 2};
  for (const Rational& c : {Rational(1), Rational(3, 2), Rational(7)}) EXPECT_EQ(cylinder_overlap_set(c), expected);
  EXPECT_EQ(cylinder_overlap_set(Rational(1), Rational(0), Rational(1)), (std::vector<std::int64_t>{0}));
  EXPECT_THROW(cylinder_overlap_set(Rational(0)), std::invalid_argument);
}

TEST(Free2House, RegionAndClosureRules) {
  const AtomSet R = free2house_region(4);
  EXPECT_EQ(R.size(), 9u);
  const AtomSet bar = closure(R);
  for (const Atom& a : truncated_space(5)) {
    EXPECT_EQ(in_free2house_region(a), R.contains(a) || (a.kind == AtomKind::UpperFace && a.room.is_r_power() &&
                                                         a.room.length() > 4));
    if (a.room.length() <= 4) {
      EXPECT_EQ(in_free2house_closure(a), bar.contains(a)) << to_string(a);
    }
  }
  const auto cells = region_cells(RegionSpec{}, 2);
  EXPECT_EQ(cells.size(), ball_size(2));
  EXPECT_EQ(cells.at(Word::r_power(-2)), Cell::OpenUpperTriangle);
  EXPECT_EQ(cells.at(parse_word("ru")), Cell::Empty);
}

TEST(Specs, JsonRoundTripAndValidation) {
  RegionSpec spec{RegionKind::Cylinder, 1, Rational(3, 2), false};
  EXPECT_EQ(region_spec_from_json(to_json(spec)), spec);
  EXPECT_EQ(parse_region_kind("line-pathological"), RegionKind::Line1DPathological);
  EXPECT_THROW(parse_region_kind("torus"), std::invalid_argument);
  auto j = to_json(spec);
  j["shift"] = "-1";
  EXPECT_THROW(region_spec_from_json(j), std::invalid_argument);
}
