#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fundreg/action.hpp"
#include "fundreg/errors.hpp"
#include "fundreg/freegroup.hpp"
#include "fundreg/rational.hpp"

namespace fundreg {

// ---------------------------------------------------------------------------
// Points of the glued space X = (F2 x B) / ~
// ---------------------------------------------------------------------------

/// Canonical point [room, (x, y)]: 0 <= x, y < 1 and not the corner (0, 0).
/// Points on the walls x = 1 or y = 1 live in the neighbouring room.
struct RoomPoint {
  Word room;
  Rational x;
  Rational y;

  friend bool operator==(const RoomPoint&, const RoomPoint&) = default;
};

/// Applies (w,(1,y)) ~ (wr,(0,y)) and (w,(x,1)) ~ (wu,(x,0)).
/// Throws std::invalid_argument for corners or coordinates outside [0,1].
RoomPoint canonicalize(const Word& room, const Rational& x, const Rational& y);

RoomPoint apply_point(const ActionElement& g, const RoomPoint& p);

using PlanePoint = std::pair<Rational, Rational>;

/// phi([w,(x,y)]) = f(w) + (x,y), the covering map onto R^2 minus Z^2.
PlanePoint covering_map(const RoomPoint& p);
/// Same formula on a raw (possibly non-canonical) representative.
PlanePoint covering_map(const Word& room, const Rational& x, const Rational& y);

std::string to_string(const RoomPoint& p);

// ---------------------------------------------------------------------------
// Exact cell complex
// ---------------------------------------------------------------------------

/// Open cells of one room. Walls x = 1 and y = 1 are the LeftWall / BottomWall
/// cells of the rooms wr and wu.
enum class AtomKind : std::uint8_t { UpperFace, LowerFace, Diagonal, LeftWall, BottomWall };

struct Atom {
  Word room;
  AtomKind kind;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
    if (auto c = a.room <=> b.room; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

Atom atom_of(const RoomPoint& p);
bool is_face(AtomKind kind);
std::string to_string(AtomKind kind);
std::string to_string(const Atom& a);

/// Finite union of open cells; every set predicate on X reduces to set algebra here.
class AtomSet {
 public:
  using const_iterator = std::set<Atom>::const_iterator;

  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms) : atoms_(atoms) {}

  void insert(Atom a) { atoms_.insert(std::move(a)); }
  void insert(const AtomSet& other) { atoms_.insert(other.begin(), other.end()); }
  bool contains(const Atom& a) const { return atoms_.contains(a); }
  bool empty() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }
  const_iterator begin() const { return atoms_.begin(); }
  const_iterator end() const { return atoms_.end(); }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  std::set<Atom> atoms_;
};

AtomSet intersect(const AtomSet& a, const AtomSet& b);
AtomSet unite(const AtomSet& a, const AtomSet& b);
AtomSet difference(const AtomSet& a, const AtomSet& b);
bool is_subset(const AtomSet& a, const AtomSet& b);
bool intersects(const AtomSet& a, const AtomSet& b);

Atom act(const ActionElement& g, const Atom& a);
AtomSet act(const ActionElement& g, const AtomSet& s);

AtomSet closure(const AtomSet& s);
AtomSet interior(const AtomSet& s);
AtomSet boundary(const AtomSet& s);

/// All five cells of every room in the word ball; the truncated space.
AtomSet truncated_space(unsigned radius);

std::string to_string(const AtomSet& s);

// ---------------------------------------------------------------------------
// Per-room cell vocabulary
// ---------------------------------------------------------------------------

enum class Cell : std::uint8_t {
  Empty,
  OpenBox,
  ClosedBox,
  OpenUpperTriangle,
  ClosedUpperTriangle,
  OpenLowerTriangle,
  ClosedLowerTriangle,
  Diagonal,
  UpperBoundary,
  LowerBoundary,
  BoxBoundary,
  HalfBoxR,     ///< B_r      = (0,1] x (0,1)
  HalfBoxU,     ///< B_u      = (0,1) x (0,1]
  HalfBoxRInv,  ///< B_{r^-1} = [0,1) x (0,1)
  HalfBoxUInv,  ///< B_{u^-1} = (0,1) x [0,1)
};

inline constexpr Cell kAllCells[] = {
    Cell::Empty,         Cell::OpenBox,        Cell::ClosedBox,    Cell::OpenUpperTriangle,
    Cell::ClosedUpperTriangle, Cell::OpenLowerTriangle, Cell::ClosedLowerTriangle, Cell::Diagonal,
    Cell::UpperBoundary, Cell::LowerBoundary,  Cell::BoxBoundary,  Cell::HalfBoxR,
    Cell::HalfBoxU,      Cell::HalfBoxRInv,    Cell::HalfBoxUInv};

std::string to_string(Cell c);

/// Cell after the coordinate swap (x,y) -> (y,x).
Cell swap(Cell c);
/// Closure and boundary in X of the piece {room} x cell.
Cell cell_closure(Cell c);
Cell cell_boundary(Cell c);

/// Canonical cells making up {room} x cell.
AtomSet cell_atoms(const Word& room, Cell c);

// ---------------------------------------------------------------------------
// Coordinate neighbourhoods
// ---------------------------------------------------------------------------

/// pi(U_w): room w together with the four adjacent open half-rooms.
struct CoordNbhd {
  Word center;
};

/// Five-room description of pi(U_w). Throws TruncationError when a room
/// lies outside the word ball of the given radius.
std::vector<std::pair<Word, Cell>> nbhd_members(const CoordNbhd& U, unsigned radius);
AtomSet nbhd_atoms(const CoordNbhd& U, unsigned radius);

}  // namespace fundreg
