#include "fundreg/action.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <unordered_set>

namespace fundreg {

ActionElement make_generator(const Word& root) { return {concat(root, sigma(inverse(root))), true}; }

ActionElement compose(const ActionElement& a, const ActionElement& b) {
  return {concat(a.spine, sigma_pow(b.spine, a.parity)), a.parity != b.parity};
}

ActionElement invert(const ActionElement& a) { return {sigma_pow(inverse(a.spine), a.parity), a.parity}; }

Word apply_word(const ActionElement& a, const Word& v) { return concat(a.spine, sigma_pow(v, a.parity)); }

std::vector<ActionElement> enumerate_group_ball(std::span<const Word> roots, unsigned depth) {
  std::vector<ActionElement> generators;
  generators.reserve(roots.size());
  for (const auto& w : roots) generators.push_back(make_generator(w));

  std::vector<ActionElement> ball{ActionElement::identity()};
  std::unordered_set<ActionElement, ActionElementHash> seen{ActionElement::identity()};
  std::size_t level_begin = 0;
  for (unsigned d = 0; d < depth; ++d) {
    const std::size_t level_end = ball.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& g : generators) {
        ActionElement next = compose(g, ball[i]);
        if (!seen.contains(next)) {
          seen.insert(next);
          ball.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
    if (level_begin == ball.size()) break;
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

std::vector<SZeroCensus> s_zero_census(std::span<const Word> roots, unsigned max_depth, unsigned max_length) {
  std::vector<std::size_t> candidates(max_length + 1, 0);
  for (const Word& w : enumerate_ball(max_length))
    if (exponent_sum(w) == 0) candidates[w.length()] += 2;  // both parities
  std::vector<SZeroCensus> out;
  for (unsigned d = 0; d <= max_depth; ++d) {
    SZeroCensus c{d, 0, 0, candidates, std::vector<std::size_t>(max_length + 1, 0)};
    const auto ball = enumerate_group_ball(roots, d);
    c.elements = ball.size();
    for (const auto& g : ball) {
      if (exponent_sum(g.spine) != 0) ++c.s_nonzero;
      else if (g.spine.length() <= max_length) ++c.realized[g.spine.length()];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ActionElement> enumerate_weighted_ball(unsigned depth) {
  // generators[k]: reflections of cost k.
  std::vector<std::vector<ActionElement>> generators(std::max(depth, 1u) + 1);
  for (const auto& w : enumerate_ball(depth))
    generators[std::max<std::size_t>(1, w.length())].push_back(make_generator(w));

  // levels[c]: elements whose cheapest expression costs exactly c.
  std::vector<std::vector<ActionElement>> levels(depth + 1);
  levels[0].push_back(ActionElement::identity());
  std::unordered_set<ActionElement, ActionElementHash> seen{ActionElement::identity()};
  for (unsigned c = 1; c <= depth; ++c) {
    for (unsigned k = 1; k <= c; ++k) {
      for (const auto& x : levels[c - k]) {
        for (const auto& g : generators[k]) {
          ActionElement next = compose(g, x);
          if (seen.insert(next).second) levels[c].push_back(std::move(next));
        }
      }
    }
  }
  std::vector<ActionElement> ball;
  ball.reserve(seen.size());
  for (auto& level : levels) ball.insert(ball.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  std::sort(ball.begin(), ball.end());
  return ball;
}

SpineWalk walk_to_spine(const Word& v) {
  SpineWalk walk;
  for (auto letter : v.letters()) {
    const Generator image = walk.element.parity ? sigma(letter) : letter;
    if (is_horizontal(image)) {
      walk.index += sign(image);
      continue;
    }
    // r^i sigma(u^{+-1}) = r^{i +- 1}
    Word root = Word::r_power(walk.index);
    walk.element = compose(make_generator(root), walk.element);
    walk.roots.push_back(std::move(root));
    walk.index += sign(image);
  }
  return walk;
}

std::string to_string(const ActionElement& g) {
  return "(" + to_string(g.spine) + ", " + (g.parity ? "1" : "0") + ")";
}

std::string generator_text(const Word& root) { return "g[" + to_string(root) + "]"; }

ActionElement parse_action_element(std::string_view text) {
  const auto open = text.find('(');
  const auto comma = text.find(',');
  const auto close = text.find(')');
  if (open == std::string_view::npos || comma == std::string_view::npos || close == std::string_view::npos ||
      !(open < comma && comma < close))
    throw std::invalid_argument("malformed action element: '" + std::string(text) + "'");
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  const auto spine = trim(text.substr(open + 1, comma - open - 1));
  const auto parity = trim(text.substr(comma + 1, close - comma - 1));
  if (parity != "0" && parity != "1")
    throw std::invalid_argument("parity must be 0 or 1 in '" + std::string(text) + "'");
  return {parse_word(spine), parity == "1"};
}

}  // namespace fundreg
