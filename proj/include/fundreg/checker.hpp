#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fundreg/errors.hpp"
#include "fundreg/parallel.hpp"
#include "fundreg/report.hpp"
#include "fundreg/systems.hpp"

namespace fundreg {

namespace detail {

/// Smallest index i < n with pred(i), evaluated in parallel; n if none.
template <class Pred>
std::size_t first_match(std::size_t n, Pred pred) {
  std::vector<char> hit(n, 0);
  parallel_for(n, [&](std::size_t i) { hit[i] = pred(i) ? 1 : 0; });
  return static_cast<std::size_t>(std::find(hit.begin(), hit.end(), 1) - hit.begin());
}

/// Indices i < n with pred(i), ascending.
template <class Pred>
std::vector<std::size_t> all_matches(std::size_t n, Pred pred) {
  std::vector<char> hit(n, 0);
  parallel_for(n, [&](std::size_t i) { hit[i] = pred(i) ? 1 : 0; });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

/// Union of many sets by pairwise merging, so the cost stays near-linear.
template <class Set>
Set unite_all(std::vector<Set> parts) {
  if (parts.empty()) return Set{};
  while (parts.size() > 1) {
    std::vector<Set> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(unite(parts[i], parts[i + 1]));
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

/// Constant over the last `window` entries.
bool stable_tail(const std::vector<std::size_t>& counts, std::size_t window);
bool strictly_increasing(const std::vector<std::size_t>& counts);

}  // namespace detail

/// gR meets R only for g = identity, over the group ball.
template <ActionSystem S>
VerificationReport check_disjointness(const S& sys, unsigned depth, unsigned radius) {
  VerificationReport rep{"disjointness", Verdict::Verified, depth, radius};
  try {
    const auto ball = sys.group_ball(depth);
    const auto R = sys.region(radius);
    const auto id = sys.identity();
    const std::size_t bad = detail::first_match(ball.size(), [&](std::size_t i) {
      return !(ball[i] == id) && intersects(sys.act(ball[i], R), R);
    });
    rep.counts.push_back({{"elements", ball.size()}, {"region_pieces", R.size()}});
    if (bad < ball.size()) {
      rep.verdict = Verdict::Refuted;
      rep.witnesses.push_back({{"element", sys.label(ball[bad])},
                               {"overlap", sys.describe(intersect(sys.act(ball[bad], R), R))}});
    }
  } catch (const TruncationError& e) {
    rep.verdict = Verdict::Inconclusive;
    rep.witnesses.push_back({{"truncation", e.what()}});
  }
  return rep;
}

/// Every piece of the target (default: the truncated space) lies in g closure(R)
/// for some certificate element g.
template <ActionSystem S>
VerificationReport check_coverage(const S& sys, unsigned depth, unsigned radius,
                                  std::optional<typename S::Set> target = std::nullopt) {
  VerificationReport rep{"coverage", Verdict::Verified, depth, radius};
  try {
    const auto goal = target ? *target : sys.space(radius);
    const auto bar = sys.closure(sys.region(radius));
    const auto elems = sys.cover_elements(depth, radius);
    std::vector<typename S::Set> parts(elems.size());
    parallel_for(elems.size(), [&](std::size_t i) { parts[i] = intersect(sys.act(elems[i], bar), goal); });
    const auto covered = detail::unite_all(std::move(parts));
    rep.counts.push_back({{"certificates", elems.size()}});
    if (!is_subset(goal, covered)) {
      rep.verdict = sys.region_is_exact() ? Verdict::Refuted : Verdict::Inconclusive;
      rep.witnesses.push_back({{"target", sys.describe(goal)}, {"covered", sys.describe(covered)}});
    }
  } catch (const TruncationError& e) {
    rep.verdict = Verdict::Inconclusive;
    rep.witnesses.push_back({{"truncation", e.what()}});
  }
  return rep;
}

/// closure(R) meets g closure(R) only inside boundary(R), for g != identity.
template <ActionSystem S>
VerificationReport boundary_containment(const S& sys, unsigned depth, unsigned radius) {
  VerificationReport rep{"boundary-containment", Verdict::Verified, depth, radius};
  try {
    const auto ball = sys.group_ball(depth);
    const auto R = sys.region(radius);
    const auto bar = sys.closure(R);
    const auto edge = sys.boundary(R);
    const auto id = sys.identity();
    std::vector<typename S::Set> meet(ball.size());
    parallel_for(ball.size(), [&](std::size_t i) {
      if (!(ball[i] == id)) meet[i] = intersect(bar, sys.act(ball[i], bar));
    });
    std::size_t touching = 0;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (meet[i].empty()) continue;
      ++touching;
      if (!is_subset(meet[i], edge) && rep.verdict == Verdict::Verified) {
        rep.verdict = Verdict::Refuted;
        rep.witnesses.push_back({{"element", sys.label(ball[i])}, {"meet", sys.describe(meet[i])}});
      }
    }
    rep.counts.push_back({{"elements", ball.size()}, {"touching", touching}});
  } catch (const TruncationError& e) {
    rep.verdict = Verdict::Inconclusive;
    rep.witnesses.push_back({{"truncation", e.what()}});
  }
  return rep;
}

/// Distinct g in the ball with g closure(R) meeting `nbhd`. The closure is
/// truncated at the system horizon so that no preimage of `nbhd` escapes it.
template <ActionSystem S>
std::vector<typename S::Element> translates_meeting(const S& sys, const typename S::Set& nbhd, unsigned depth,
                                                    unsigned radius) {
  const auto ball = sys.group_ball(depth);
  const auto bar = sys.closure(sys.region(sys.horizon(radius, depth)));
  const auto idx = detail::all_matches(ball.size(), [&](std::size_t i) {
    return intersects(sys.act(sys.inverse(ball[i]), nbhd), bar);
  });
  std::vector<typename S::Element> out;
  for (std::size_t i : idx) out.push_back(ball[i]);
  return out;
}

template <ActionSystem S>
struct ProfileStep {
  S system;
  unsigned depth;
  unsigned radius;
  typename S::Set nbhd;
};

/// Count of translates meeting the neighbourhood at each step; verified when
/// the last `window` counts agree, refuted when the counts increase strictly.
template <ActionSystem S>
VerificationReport local_finiteness_profile(std::span<const ProfileStep<S>> steps, std::size_t window = 3) {
  VerificationReport rep{"local-finiteness", Verdict::Inconclusive};
  if (steps.empty()) return rep;
  rep.depth = steps.back().depth;
  rep.radius = steps.back().radius;
  std::vector<std::size_t> counts;
  try {
    for (const auto& st : steps) {
      const auto hits = translates_meeting(st.system, st.nbhd, st.depth, st.radius);
      counts.push_back(hits.size());
      rep.counts.push_back({{"depth", st.depth}, {"radius", st.radius}, {"count", hits.size()}});
    }
  } catch (const TruncationError& e) {
    rep.witnesses.push_back({{"truncation", e.what()}});
    return rep;
  }
  if (counts.size() >= window && detail::stable_tail(counts, window)) {
    rep.verdict = Verdict::Verified;
  } else if (counts.size() >= 2 && detail::strictly_increasing(counts)) {
    rep.verdict = Verdict::Refuted;
    for (const auto& st : steps)
      rep.witnesses.push_back({{"nbhd", st.system.describe(st.nbhd)}, {"depth", st.depth}});
  }
  return rep;
}

template <ActionSystem S>
VerificationReport local_finiteness_profile(const std::vector<ProfileStep<S>>& steps, std::size_t window = 3) {
  return local_finiteness_profile(std::span<const ProfileStep<S>>(steps), window);
}

/// Elements g != identity with g closure(R) meeting closure(R).
template <ActionSystem S>
std::vector<typename S::Element> self_adjacent(const S& sys, unsigned depth, unsigned radius) {
  const auto ball = sys.group_ball(depth);
  const auto bar = sys.closure(sys.region(sys.horizon(radius, depth)));
  const auto id = sys.identity();
  const auto idx = detail::all_matches(ball.size(), [&](std::size_t i) {
    return !(ball[i] == id) && intersects(sys.act(ball[i], bar), bar);
  });
  std::vector<typename S::Element> out;
  for (std::size_t i : idx) out.push_back(ball[i]);
  return out;
}

/// With a candidate U (which must be open and contain closure(R)): the overlap
/// set {g : gU meets U} per depth, verified once stable. Without one: the
/// closure self-overlaps per depth; strict growth refutes FSA for every U.
template <ActionSystem S>
VerificationReport fsa_check(const S& sys, const std::optional<typename S::Set>& candidate,
                             std::span<const unsigned> schedule, unsigned radius, std::size_t window = 3) {
  VerificationReport rep{"finitely-self-adjacent", Verdict::Inconclusive, schedule.empty() ? 0 : schedule.back(),
                         radius};
  if (candidate) {
    const auto R = sys.region(radius);
    if (!is_subset(sys.closure(R), *candidate))
      throw std::invalid_argument("candidate neighbourhood does not contain the closure");
    if (!(sys.interior(*candidate) == *candidate)) throw std::invalid_argument("candidate neighbourhood is not open");
  }
  std::vector<std::size_t> counts;
  std::vector<typename S::Element> last;
  try {
    for (unsigned d : schedule) {
      std::vector<typename S::Element> hits;
      if (candidate) {
        const auto ball = sys.group_ball(d);
        const auto& U = *candidate;
        for (std::size_t i : detail::all_matches(ball.size(),
                                                 [&](std::size_t i) { return intersects(sys.act(ball[i], U), U); }))
          hits.push_back(ball[i]);
      } else {
        hits = self_adjacent(sys, d, radius);
      }
      counts.push_back(hits.size());
      rep.counts.push_back({{"depth", d}, {"count", hits.size()}});
      last = std::move(hits);
    }
  } catch (const TruncationError& e) {
    rep.witnesses.push_back({{"truncation", e.what()}});
    return rep;
  }
  if (candidate) {
    if (counts.size() >= window && detail::stable_tail(counts, window)) rep.verdict = Verdict::Verified;
  } else if (counts.size() >= 2 && detail::strictly_increasing(counts)) {
    rep.verdict = Verdict::Refuted;
  }
  for (const auto& g : last) rep.witnesses.push_back(sys.label(g));
  return rep;
}

template <ActionSystem S>
VerificationReport fsa_check(const S& sys, const std::optional<typename S::Set>& candidate,
                             const std::vector<unsigned>& schedule, unsigned radius, std::size_t window = 3) {
  return fsa_check(sys, candidate, std::span<const unsigned>(schedule), radius, window);
}

/// Constructive form of "FSA implies locally finite": each sample point p lies
/// in some g closure(R), and gU then meets at most |overlap set| translates.
template <ActionSystem S>
VerificationReport fsa_implies_lf_audit(const S& sys, const VerificationReport& fsa,
                                        const std::optional<typename S::Set>& candidate, unsigned depth,
                                        unsigned radius) {
  VerificationReport rep{"fsa-implies-locally-finite", Verdict::Inconclusive, depth, radius};
  if (fsa.verdict != Verdict::Verified || !candidate) {
    rep.witnesses.push_back({{"skipped", "no finitely self adjacent candidate"}});
    return rep;
  }
  const std::size_t bound = fsa.witnesses.size();
  const auto ball = sys.group_ball(depth);
  const auto bar = sys.closure(sys.region(radius));
  const auto points = sys.sample_points(radius);
  std::vector<std::size_t> meet(points.size(), 0);
  std::vector<char> placed(points.size(), 0);
  parallel_for(points.size(), [&](std::size_t p) {
    auto home = std::find_if(ball.begin(), ball.end(),
                             [&](const auto& g) { return is_subset(points[p], sys.act(g, bar)); });
    if (home == ball.end()) return;
    placed[p] = 1;
    const auto nb = sys.act(*home, *candidate);
    meet[p] = static_cast<std::size_t>(std::count_if(
        ball.begin(), ball.end(), [&](const auto& h) { return intersects(sys.act(h, bar), nb); }));
  });
  const std::size_t worst = meet.empty() ? 0 : *std::max_element(meet.begin(), meet.end());
  const auto unplaced = static_cast<std::size_t>(std::count(placed.begin(), placed.end(), 0));
  rep.counts.push_back({{"points", points.size()}, {"max_translates", worst}, {"bound", bound},
                        {"unplaced", unplaced}});
  if (worst > bound) {
    rep.verdict = Verdict::Refuted;
    const auto at = static_cast<std::size_t>(std::max_element(meet.begin(), meet.end()) - meet.begin());
    rep.witnesses.push_back({{"point", sys.describe(points[at])}, {"translates", worst}});
  } else if (unplaced == 0) {
    rep.verdict = Verdict::Verified;
  }
  return rep;
}

/// boundary(R) meets the ball-orbit of x in a set whose size stabilizes.
template <ActionSystem S>
VerificationReport orbit_boundary_finiteness(const S& sys, const VerificationReport& fsa,
                                             const typename S::Set& point, std::span<const unsigned> schedule,
                                             unsigned radius, std::size_t window = 3) {
  VerificationReport rep{"orbit-boundary-finiteness", Verdict::Inconclusive,
                         schedule.empty() ? 0 : schedule.back(), radius};
  if (fsa.verdict != Verdict::Verified) {
    rep.witnesses.push_back({{"skipped", "no finitely self adjacent candidate"}});
    return rep;
  }
  const auto edge = sys.boundary(sys.region(radius));
  if (!is_subset(point, edge)) throw std::invalid_argument("orbit base point is not on the boundary");
  std::vector<std::size_t> counts;
  typename S::Set found;
  for (unsigned d : schedule) {
    typename S::Set orbit;
    for (const auto& g : sys.group_ball(d)) orbit = unite(orbit, intersect(sys.act(g, point), edge));
    counts.push_back(orbit.size());
    rep.counts.push_back({{"depth", d}, {"count", counts.back()}});
    found = orbit;
  }
  if (counts.size() >= window && detail::stable_tail(counts, window)) rep.verdict = Verdict::Verified;
  rep.witnesses.push_back(sys.describe(found));
  return rep;
}

template <ActionSystem S>
VerificationReport orbit_boundary_finiteness(const S& sys, const VerificationReport& fsa,
                                             const typename S::Set& point, const std::vector<unsigned>& schedule,
                                             unsigned radius, std::size_t window = 3) {
  return orbit_boundary_finiteness(sys, fsa, point, std::span<const unsigned>(schedule), radius, window);
}

/// Instance of "cocompact and FSA imply closure(R) compact". Boundedness is
/// read off the extent at radius and twice the radius, plus the factor flag.
template <ActionSystem S>
VerificationReport compactness_proxy(const S& sys, Verdict fsa, unsigned radius) {
  VerificationReport rep{"compactness-proxy", Verdict::Verified, 0, radius};
  const Rational near = sys.extent(radius);
  const Rational far = sys.extent(2 * radius);
  const bool bounded = near == far && sys.closure_factor_compact();
  rep.counts.push_back({{"extent", to_string(near)}, {"extent_doubled", to_string(far)}});
  rep.witnesses.push_back({{"cocompact", sys.cocompact()},
                           {"fsa", to_string(fsa)},
                           {"closure_bounded", bounded}});
  if (sys.cocompact() && fsa == Verdict::Verified && !bounded) rep.verdict = Verdict::Refuted;
  return rep;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

struct EdgeGluing {
  std::string from;
  std::string to;
  std::string element;
  bool orientation_preserving = true;
};

struct QuotientDescription {
  std::string system;
  std::vector<std::string> pieces;
  std::vector<EdgeGluing> gluings;
  std::vector<std::string> free_edges;  ///< boundary edges fixed by their stabilizer
  VerificationReport report;            ///< representative uniqueness at truncation
};

nlohmann::json to_json(const QuotientDescription& q);

/// Triangle strip: top edge of triangle i glued to the left edge of triangle
/// i+1 via g_{r^i}; diagonals fixed pointwise.
QuotientDescription quotient_build(const Free2HouseSystem& sys, unsigned depth, unsigned radius);
/// closure(R) = [a,b] with a ~ b.
QuotientDescription quotient_build(const LineSystem& sys, unsigned depth, unsigned radius);

/// Rational points with denominator <= 16 in [0,1], ascending.
std::vector<Rational> farey_points(std::int64_t max_denominator = 16);

// ---------------------------------------------------------------------------
// Miscellaneous
// ---------------------------------------------------------------------------

/// Rooms v with g v = v in the word ball, paired with the fixed cell.
std::vector<std::pair<Word, Cell>> fixed_point_search(const ActionElement& g, unsigned radius);

/// Sampled exact checks for R = U_{x in (0,1)} {x} x (1/x, 1/x + 1) under Z^2.
VerificationReport plane_pathological_disjointness(std::int64_t bound = 10);
VerificationReport plane_pathological_unbounded(std::int64_t max_height = 64);

}  // namespace fundreg
