#include "fundreg/tilespace.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace fundreg {

namespace {

const Word kR{Generator::r};
const Word kU{Generator::u};
const Word kRInv{Generator::r_inv};
const Word kUInv{Generator::u_inv};

bool is_corner(const Rational& x, const Rational& y) {
  const bool x_end = x == Rational(0) || x == Rational(1);
  const bool y_end = y == Rational(0) || y == Rational(1);
  return x_end && y_end;
}

}  // namespace

RoomPoint canonicalize(const Word& room, const Rational& x, const Rational& y) {
  if (x < 0 || x > 1 || y < 0 || y > 1)
    throw std::invalid_argument("coordinates outside [0,1]^2: (" + to_string(x) + ", " + to_string(y) + ")");
  if (is_corner(x, y)) throw std::invalid_argument("excluded corner point");
  if (x == Rational(1)) return {concat(room, kR), Rational(0), y};
  if (y == Rational(1)) return {concat(room, kU), x, Rational(0)};
  return {room, x, y};
}

RoomPoint apply_point(const ActionElement& g, const RoomPoint& p) {
  Word room = apply_word(g, p.room);
  if (g.parity) return canonicalize(room, p.y, p.x);
  return canonicalize(room, p.x, p.y);
}

PlanePoint covering_map(const Word& room, const Rational& x, const Rational& y) {
  const auto [fx, fy] = fmap(room);
  return {Rational(fx) + x, Rational(fy) + y};
}

PlanePoint covering_map(const RoomPoint& p) { return covering_map(p.room, p.x, p.y); }

std::string to_string(const RoomPoint& p) {
  return "[" + fundreg::to_string(p.room) + ", (" + fundreg::to_string(p.x) + ", " + fundreg::to_string(p.y) + ")]";
}

Atom atom_of(const RoomPoint& p) {
  if (p.x == Rational(0)) return {p.room, AtomKind::LeftWall};
  if (p.y == Rational(0)) return {p.room, AtomKind::BottomWall};
  if (p.x < p.y) return {p.room, AtomKind::UpperFace};
  if (p.x > p.y) return {p.room, AtomKind::LowerFace};
  return {p.room, AtomKind::Diagonal};
}

bool is_face(AtomKind kind) { return kind == AtomKind::UpperFace || kind == AtomKind::LowerFace; }

std::string to_string(AtomKind kind) {
  switch (kind) {
    case AtomKind::UpperFace: return "upper";
    case AtomKind::LowerFace: return "lower";
    case AtomKind::Diagonal: return "diagonal";
    case AtomKind::LeftWall: return "left-wall";
    case AtomKind::BottomWall: return "bottom-wall";
  }
  return "?";
}

std::string to_string(const Atom& a) { return to_string(a.kind) + "(" + fundreg::to_string(a.room) + ")"; }

std::string to_string(const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += ", ";
    out += to_string(a);
    first = false;
  }
  return out + "}";
}

AtomSet intersect(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  for (const auto& x : a)
    if (b.contains(x)) out.insert(x);
  return out;
}

AtomSet unite(const AtomSet& a, const AtomSet& b) {
  AtomSet out = a;
  out.insert(b);
  return out;
}

AtomSet difference(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  for (const auto& x : a)
    if (!b.contains(x)) out.insert(x);
  return out;
}

bool is_subset(const AtomSet& a, const AtomSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const Atom& x) { return b.contains(x); });
}

bool intersects(const AtomSet& a, const AtomSet& b) {
  const AtomSet& small = a.size() <= b.size() ? a : b;
  const AtomSet& large = a.size() <= b.size() ? b : a;
  return std::any_of(small.begin(), small.end(), [&](const Atom& x) { return large.contains(x); });
}

namespace {

AtomKind swap_kind(AtomKind k) {
  switch (k) {
    case AtomKind::UpperFace: return AtomKind::LowerFace;
    case AtomKind::LowerFace: return AtomKind::UpperFace;
    case AtomKind::Diagonal: return AtomKind::Diagonal;
    case AtomKind::LeftWall: return AtomKind::BottomWall;
    case AtomKind::BottomWall: return AtomKind::LeftWall;
  }
  return k;
}

// The two faces adjacent to an edge cell.
std::pair<Atom, Atom> star(const Atom& edge) {
  switch (edge.kind) {
    case AtomKind::Diagonal:
      return {{edge.room, AtomKind::UpperFace}, {edge.room, AtomKind::LowerFace}};
    case AtomKind::LeftWall:
      return {{edge.room, AtomKind::UpperFace}, {concat(edge.room, kRInv), AtomKind::LowerFace}};
    case AtomKind::BottomWall:
      return {{edge.room, AtomKind::LowerFace}, {concat(edge.room, kUInv), AtomKind::UpperFace}};
    default:
      throw std::logic_error("star() called on a face");
  }
}

}  // namespace

Atom act(const ActionElement& g, const Atom& a) {
  return {apply_word(g, a.room), g.parity ? swap_kind(a.kind) : a.kind};
}

AtomSet act(const ActionElement& g, const AtomSet& s) {
  AtomSet out;
  for (const auto& a : s) out.insert(act(g, a));
  return out;
}

AtomSet closure(const AtomSet& s) {
  AtomSet out = s;
  for (const auto& a : s) {
    if (a.kind == AtomKind::UpperFace) {
      out.insert({a.room, AtomKind::Diagonal});
      out.insert({a.room, AtomKind::LeftWall});
      out.insert({concat(a.room, kU), AtomKind::BottomWall});
    } else if (a.kind == AtomKind::LowerFace) {
      out.insert({a.room, AtomKind::Diagonal});
      out.insert({a.room, AtomKind::BottomWall});
      out.insert({concat(a.room, kR), AtomKind::LeftWall});
    }
  }
  return out;
}

AtomSet interior(const AtomSet& s) {
  AtomSet out;
  for (const auto& a : s) {
    if (is_face(a.kind)) {
      out.insert(a);
      continue;
    }
    const auto [left, right] = star(a);
    if (s.contains(left) && s.contains(right)) out.insert(a);
  }
  return out;
}

AtomSet boundary(const AtomSet& s) { return difference(closure(s), interior(s)); }

AtomSet truncated_space(unsigned radius) {
  AtomSet out;
  for (const auto& w : enumerate_ball(radius))
    for (auto k : {AtomKind::UpperFace, AtomKind::LowerFace, AtomKind::Diagonal, AtomKind::LeftWall,
                   AtomKind::BottomWall})
      out.insert({w, k});
  return out;
}

std::string to_string(Cell c) {
  switch (c) {
    case Cell::Empty: return "Empty";
    case Cell::OpenBox: return "OpenBox";
    case Cell::ClosedBox: return "ClosedBox";
    case Cell::OpenUpperTriangle: return "OpenUpperTriangle";
    case Cell::ClosedUpperTriangle: return "ClosedUpperTriangle";
    case Cell::OpenLowerTriangle: return "OpenLowerTriangle";
    case Cell::ClosedLowerTriangle: return "ClosedLowerTriangle";
    case Cell::Diagonal: return "Diagonal";
    case Cell::UpperBoundary: return "UpperBoundary";
    case Cell::LowerBoundary: return "LowerBoundary";
    case Cell::BoxBoundary: return "BoxBoundary";
    case Cell::HalfBoxR: return "HalfBoxR";
    case Cell::HalfBoxU: return "HalfBoxU";
    case Cell::HalfBoxRInv: return "HalfBoxRInv";
    case Cell::HalfBoxUInv: return "HalfBoxUInv";
  }
  return "?";
}

Cell swap(Cell c) {
  switch (c) {
    case Cell::OpenUpperTriangle: return Cell::OpenLowerTriangle;
    case Cell::OpenLowerTriangle: return Cell::OpenUpperTriangle;
    case Cell::ClosedUpperTriangle: return Cell::ClosedLowerTriangle;
    case Cell::ClosedLowerTriangle: return Cell::ClosedUpperTriangle;
    case Cell::UpperBoundary: return Cell::LowerBoundary;
    case Cell::LowerBoundary: return Cell::UpperBoundary;
    case Cell::HalfBoxR: return Cell::HalfBoxU;
    case Cell::HalfBoxU: return Cell::HalfBoxR;
    case Cell::HalfBoxRInv: return Cell::HalfBoxUInv;
    case Cell::HalfBoxUInv: return Cell::HalfBoxRInv;
    default: return c;
  }
}

Cell cell_closure(Cell c) {
  switch (c) {
    case Cell::OpenBox:
    case Cell::HalfBoxR:
    case Cell::HalfBoxU:
    case Cell::HalfBoxRInv:
    case Cell::HalfBoxUInv: return Cell::ClosedBox;
    case Cell::OpenUpperTriangle: return Cell::ClosedUpperTriangle;
    case Cell::OpenLowerTriangle: return Cell::ClosedLowerTriangle;
    default: return c;
  }
}

Cell cell_boundary(Cell c) {
  switch (c) {
    case Cell::Empty: return Cell::Empty;
    case Cell::OpenBox:
    case Cell::ClosedBox:
    case Cell::BoxBoundary:
    case Cell::HalfBoxR:
    case Cell::HalfBoxU:
    case Cell::HalfBoxRInv:
    case Cell::HalfBoxUInv: return Cell::BoxBoundary;
    case Cell::OpenUpperTriangle:
    case Cell::ClosedUpperTriangle:
    case Cell::UpperBoundary: return Cell::UpperBoundary;
    case Cell::OpenLowerTriangle:
    case Cell::ClosedLowerTriangle:
    case Cell::LowerBoundary: return Cell::LowerBoundary;
    case Cell::Diagonal: return Cell::Diagonal;
  }
  return c;
}

AtomSet cell_atoms(const Word& w, Cell c) {
  const Atom upper{w, AtomKind::UpperFace};
  const Atom lower{w, AtomKind::LowerFace};
  const Atom diag{w, AtomKind::Diagonal};
  const Atom left{w, AtomKind::LeftWall};
  const Atom bottom{w, AtomKind::BottomWall};
  const Atom right{concat(w, kR), AtomKind::LeftWall};
  const Atom top{concat(w, kU), AtomKind::BottomWall};
  switch (c) {
    case Cell::Empty: return {};
    case Cell::OpenBox: return {upper, lower, diag};
    case Cell::ClosedBox: return {upper, lower, diag, left, bottom, right, top};
    case Cell::OpenUpperTriangle: return {upper};
    case Cell::ClosedUpperTriangle: return {upper, diag, left, top};
    case Cell::OpenLowerTriangle: return {lower};
    case Cell::ClosedLowerTriangle: return {lower, diag, bottom, right};
    case Cell::Diagonal: return {diag};
    case Cell::UpperBoundary: return {diag, left, top};
    case Cell::LowerBoundary: return {diag, bottom, right};
    case Cell::BoxBoundary: return {left, bottom, right, top};
    case Cell::HalfBoxR: return {upper, lower, diag, right};
    case Cell::HalfBoxU: return {upper, lower, diag, top};
    case Cell::HalfBoxRInv: return {upper, lower, diag, left};
    case Cell::HalfBoxUInv: return {upper, lower, diag, bottom};
  }
  return {};
}

std::vector<std::pair<Word, Cell>> nbhd_members(const CoordNbhd& U, unsigned radius) {
  std::vector<std::pair<Word, Cell>> members{{U.center, Cell::ClosedBox},
                                             {concat(U.center, kR), Cell::HalfBoxRInv},
                                             {concat(U.center, kU), Cell::HalfBoxUInv},
                                             {concat(U.center, kRInv), Cell::HalfBoxR},
                                             {concat(U.center, kUInv), Cell::HalfBoxU}};
  for (const auto& [room, cell] : members)
    if (room.length() > radius) throw TruncationError("neighbourhood exits truncation");
  return members;
}

AtomSet nbhd_atoms(const CoordNbhd& U, unsigned radius) {
  AtomSet out;
  for (const auto& [room, cell] : nbhd_members(U, radius)) out.insert(cell_atoms(room, cell));
  return out;
}

}  // namespace fundreg
