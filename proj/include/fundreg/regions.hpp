#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fundreg/freegroup.hpp"
#include "fundreg/rational.hpp"
#include "fundreg/tilespace.hpp"

namespace fundreg {

// ---------------------------------------------------------------------------
// Exact subsets of the real line
// ---------------------------------------------------------------------------

/// Interval with rational endpoints; lo == hi only for a closed point.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(Rational lo, Rational hi) { return {lo, hi, false, false}; }
  static Interval closed(Rational lo, Rational hi) { return {lo, hi, true, true}; }
  static Interval point(Rational p) { return {p, p, true, true}; }

  bool contains(const Rational& t) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of intervals, kept sorted with touching pieces merged, so two
/// equal sets have equal representations.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(std::initializer_list<Interval> pieces);
  explicit IntervalSet(std::vector<Interval> pieces);

  const std::vector<Interval>& components() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  std::size_t size() const noexcept { return pieces_.size(); }
  bool contains(const Rational& t) const;

  /// Smallest lo and largest hi; requires a nonempty set.
  Rational infimum() const;
  Rational supremum() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
bool intersects(const IntervalSet& a, const IntervalSet& b);
bool is_subset(const IntervalSet& a, const IntervalSet& b);
IntervalSet translate(const IntervalSet& s, const Rational& shift);
IntervalSet translate(const IntervalSet& s, std::int64_t m);
IntervalSet closure(const IntervalSet& s);
IntervalSet interior(const IntervalSet& s);
IntervalSet boundary(const IntervalSet& s);

/// "(0, 1/2) U [3/2, 5/3]"; the empty set is "{}".
std::string to_string(const Interval& i);
std::string to_string(const IntervalSet& s);

nlohmann::json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Region descriptors
// ---------------------------------------------------------------------------

enum class RegionKind { Free2House, Line1DPathological, Line1DStandard, Plane2DPathological, Cylinder };

std::string to_string(RegionKind kind);
RegionKind parse_region_kind(const std::string& text);

struct RegionSpec {
  RegionKind kind = RegionKind::Free2House;
  /// Number of intervals kept for Line1DPathological.
  std::int64_t intervals = 1;
  /// Shift c of the cylinder translation.
  Rational shift{1};
  /// Whether the cylinder's inert factor X is compact.
  bool compact_factor = true;

  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

nlohmann::json to_json(const RegionSpec& spec);
RegionSpec region_spec_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Free-2-house spine region R = {r^i} x T
// ---------------------------------------------------------------------------

/// Every room of the word ball, mapped to OpenUpperTriangle on the spine and
/// Empty elsewhere.
std::map<Word, Cell> region_cells(const RegionSpec& spec, unsigned radius);

/// Upper faces of r^i, |i| <= radius.
AtomSet free2house_region(unsigned radius);

/// Rule-based membership in the closure of the untruncated region.
bool in_free2house_closure(const Atom& a);
bool in_free2house_region(const Atom& a);

// ---------------------------------------------------------------------------
// Line and plane examples
// ---------------------------------------------------------------------------

/// First N intervals (n + n/(n+1), n + (n+1)/(n+2)), n = 0..N-1.
IntervalSet pathological_1d(std::int64_t N);

/// 0 < x < 1 and 1/x < y < 1/x + 1. Throws std::domain_error("outside chart") at x = 0.
bool plane2d_membership(const Rational& x, const Rational& y);

/// {m : (mc + lo, mc + hi) meets (lo, hi)} for the cylinder band U = X x (lo, hi).
/// Defaults to U = X x (-c, 2c).
std::vector<std::int64_t> cylinder_overlap_set(const Rational& c, std::optional<Rational> lo = std::nullopt,
                                               std::optional<Rational> hi = std::nullopt);

}  // namespace fundreg
