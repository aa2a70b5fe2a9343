#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fundreg/action.hpp"
#include "fundreg/rational.hpp"
#include "fundreg/regions.hpp"
#include "fundreg/tilespace.hpp"

namespace fundreg {

/// A group acting by homeomorphisms on a space whose relevant subsets are
/// represented exactly by `Set`, together with a fundamental-region candidate
/// available at any truncation radius.
template <class S>
concept ActionSystem = requires(const S& sys, const typename S::Element& g, const typename S::Set& a,
                                unsigned n) {
  { sys.name() } -> std::convertible_to<std::string>;
  { sys.identity() } -> std::same_as<typename S::Element>;
  { sys.inverse(g) } -> std::same_as<typename S::Element>;
  { sys.group_ball(n) } -> std::same_as<std::vector<typename S::Element>>;
  { sys.act(g, a) } -> std::same_as<typename S::Set>;
  { sys.region(n) } -> std::same_as<typename S::Set>;
  { sys.closure(a) } -> std::same_as<typename S::Set>;
  { sys.boundary(a) } -> std::same_as<typename S::Set>;
  { sys.interior(a) } -> std::same_as<typename S::Set>;
  { sys.horizon(n, n) } -> std::same_as<unsigned>;
  { sys.space(n) } -> std::same_as<typename S::Set>;
  { sys.cover_elements(n, n) } -> std::same_as<std::vector<typename S::Element>>;
  { sys.region_is_exact() } -> std::same_as<bool>;
  { sys.cocompact() } -> std::same_as<bool>;
  { sys.closure_factor_compact() } -> std::same_as<bool>;
  { sys.extent(n) } -> std::same_as<Rational>;
  { sys.label(g) } -> std::same_as<std::string>;
  { sys.describe(a) } -> std::same_as<std::string>;
  { sys.sample_points(n) } -> std::same_as<std::vector<typename S::Set>>;
  { intersect(a, a) } -> std::same_as<typename S::Set>;
  { unite(a, a) } -> std::same_as<typename S::Set>;
  { is_subset(a, a) } -> std::same_as<bool>;
  { intersects(a, a) } -> std::same_as<bool>;
  { a.empty() } -> std::same_as<bool>;
  { a.size() } -> std::convertible_to<std::size_t>;
};

/// The reflection group G on the free-2-house with R = {r^i} x T.
class Free2HouseSystem {
 public:
  using Element = ActionElement;
  using Set = AtomSet;

  std::string name() const { return "free2house"; }
  Element identity() const { return ActionElement::identity(); }
  Element inverse(const Element& g) const { return invert(g); }
  /// Weighted Cayley ball (cost of g_w is max(1,|w|)); cached per depth.
  std::vector<Element> group_ball(unsigned depth) const;
  Set act(const Element& g, const Set& s) const { return fundreg::act(g, s); }
  Set region(unsigned radius) const { return free2house_region(radius); }
  Set closure(const Set& s) const { return fundreg::closure(s); }
  Set boundary(const Set& s) const { return fundreg::boundary(s); }
  Set interior(const Set& s) const { return fundreg::interior(s); }
  /// Spines in the depth-d ball have length <= 2d, so preimages of cells in
  /// rooms of length <= radius + 1 stay within radius + 2d + 1.
  unsigned horizon(unsigned radius, unsigned depth) const { return radius + 2 * depth + 1; }
  Set space(unsigned radius) const { return truncated_space(radius); }
  /// Walk-derived certificates for every cell of the word ball; `depth` unused.
  std::vector<Element> cover_elements(unsigned depth, unsigned radius) const;
  bool region_is_exact() const { return false; }
  /// X/G is R-bar/G: countably many triangles, not compact.
  bool cocompact() const { return false; }
  bool closure_factor_compact() const { return true; }
  /// Number of rooms met by the closure of the truncated region.
  Rational extent(unsigned radius) const;
  std::string label(const Element& g) const { return to_string(g); }
  std::string describe(const Set& s) const { return to_string(s); }
  /// One singleton per cell of the truncated space.
  std::vector<Set> sample_points(unsigned radius) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<unsigned, std::vector<Element>> balls;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Exact certificate that a cell of the free-2-house lies in k * closure(R).
struct CoverCertificate {
  Atom atom;
  SpineWalk walk;
  bool needs_spine_reflection = false;  ///< final g_{r^i} applied after the walk
  ActionElement element;                ///< k with atom in k * closure(R)
};

CoverCertificate coverage_certificate(const Atom& a);

/// Z acting on an interval-set region by translation through multiples of
/// `step`. Covers the standard and pathological line examples and the
/// R-factor of the cylinder X x R.
class LineSystem {
 public:
  using Element = std::int64_t;
  using Set = IntervalSet;

  static LineSystem standard();
  static LineSystem pathological();
  static LineSystem cylinder(Rational c, bool compact_factor = true);
  /// Arbitrary exact region under Z (used for corrupted test regions).
  static LineSystem custom(std::string name, IntervalSet region, Rational step = Rational(1));

  std::string name() const { return name_; }
  Element identity() const { return 0; }
  Element inverse(const Element& m) const { return -m; }
  std::vector<Element> group_ball(unsigned depth) const;
  Set act(const Element& m, const Set& s) const { return translate(s, step_ * m); }
  /// Exact regions ignore the radius; the pathological family keeps its first `radius` intervals.
  Set region(unsigned radius) const;
  Set closure(const Set& s) const { return fundreg::closure(s); }
  Set boundary(const Set& s) const { return fundreg::boundary(s); }
  Set interior(const Set& s) const { return fundreg::interior(s); }
  unsigned horizon(unsigned radius, unsigned) const { return radius; }
  /// Closed window [-radius*step, radius*step].
  Set space(unsigned radius) const;
  std::vector<Element> cover_elements(unsigned depth, unsigned) const { return group_ball(depth); }
  bool region_is_exact() const { return !pathological_; }
  bool cocompact() const { return factor_compact_; }
  bool closure_factor_compact() const { return factor_compact_; }
  Rational extent(unsigned radius) const;
  std::string label(const Element& m) const { return std::to_string(m); }
  std::string describe(const Set& s) const { return to_string(s); }
  /// Rationals in [-radius*step, radius*step] with denominators <= 16 (in units of step).
  std::vector<Set> sample_points(unsigned radius) const;

  const Rational& step() const { return step_; }
  bool is_pathological() const { return pathological_; }

 private:
  LineSystem(std::string name, IntervalSet base, Rational step, bool pathological, bool factor_compact)
      : name_(std::move(name)), base_(std::move(base)), step_(step), pathological_(pathological),
        factor_compact_(factor_compact) {}

  std::string name_;
  IntervalSet base_;
  Rational step_;
  bool pathological_;
  bool factor_compact_;
};

static_assert(ActionSystem<Free2HouseSystem>);
static_assert(ActionSystem<LineSystem>);

}  // namespace fundreg
