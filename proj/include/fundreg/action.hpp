#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fundreg/freegroup.hpp"

namespace fundreg {

/// Element of the reflection group G in normal form: v -> spine * sigma^parity(v)
/// on rooms, and the coordinate swap when parity is odd.
struct ActionElement {
  Word spine;
  bool parity = false;

  static ActionElement identity() { return {}; }
  bool is_identity() const noexcept { return !parity && spine.is_identity(); }

  friend bool operator==(const ActionElement&, const ActionElement&) = default;
  friend std::strong_ordering operator<=>(const ActionElement& a, const ActionElement& b) noexcept {
    if (auto c = a.spine <=> b.spine; c != 0) return c;
    return a.parity <=> b.parity;
  }
};

struct ActionElementHash {
  std::size_t operator()(const ActionElement& g) const noexcept {
    return WordHash{}(g.spine) * 2 + static_cast<std::size_t>(g.parity);
  }
};

/// The reflection g_w through the diagonal of room w: spine w*sigma(w^-1), parity 1.
ActionElement make_generator(const Word& root);

/// a after b.
ActionElement compose(const ActionElement& a, const ActionElement& b);
ActionElement invert(const ActionElement& a);
Word apply_word(const ActionElement& a, const Word& v);

/// Every distinct product of at most `depth` reflections g_w, w in `roots`,
/// sorted by (spine, parity).
std::vector<ActionElement> enumerate_group_ball(std::span<const Word> roots, unsigned depth);

/// Which pairs (w, n) with S(w) = 0 a root ball reaches, by spine length.
/// Records what is realized; it does not claim every S-zero pair is in G.
struct SZeroCensus {
  unsigned depth = 0;
  std::size_t elements = 0;
  std::size_t s_nonzero = 0;             ///< elements violating S(spine) = 0
  std::vector<std::size_t> candidates;   ///< [l]: pairs with S(w) = 0 and |w| = l
  std::vector<std::size_t> realized;     ///< [l]: those present in the ball
};
std::vector<SZeroCensus> s_zero_census(std::span<const Word> roots, unsigned max_depth, unsigned max_length);

/// Ball of radius `depth` in the Cayley graph of G for the generating set of
/// all g_w, where g_w costs max(1, |w|). Finite for every depth, and contains
/// g_{r^i} exactly from depth |i| on. Sorted by (spine, parity).
std::vector<ActionElement> enumerate_weighted_ball(unsigned depth);

/// Result of walking a word onto the spine {r^i}.
struct SpineWalk {
  ActionElement element;       ///< maps v onto the spine
  std::int64_t index = 0;      ///< element(v) == r^index
  std::vector<Word> roots;     ///< reflections in application order (first applied first)
};

/// Left-to-right walk: for each letter that the current element does not send
/// parallel to the spine, reflect through the current spine room.
SpineWalk walk_to_spine(const Word& v);

/// "(spine, parity)", e.g. "(rU, 1)".
std::string to_string(const ActionElement& g);
/// "g[root]".
std::string generator_text(const Word& root);
/// Inverse of to_string(ActionElement).
ActionElement parse_action_element(std::string_view text);

}  // namespace fundreg
