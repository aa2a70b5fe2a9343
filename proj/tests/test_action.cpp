#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fundreg/action.hpp"

using namespace fundreg;

namespace {

// Defining formula of a single reflection on rooms: g_w(v) = w sigma(w^-1 v).
Word reflect_room(const Word& w, const Word& v) { return w * sigma(inverse(w) * v); }

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  static const Generator kAll[] = {Generator::r, Generator::u, Generator::r_inv, Generator::u_inv};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Generator> letters(len(rng));
  for (auto& g : letters) g = kAll[pick(rng)];
  return Word(letters);
}

ActionElement random_element(std::mt19937_64& rng) {
  ActionElement g = ActionElement::identity();
  std::uniform_int_distribution<int> count(0, 6);
  for (int k = count(rng); k > 0; --k) g = compose(g, make_generator(random_word(rng, 3)));
  return g;
}

}  // namespace

TEST(Generator, NormalForm) {
  const ActionElement g = make_generator(parse_word("r"));
  EXPECT_EQ(to_string(g), "(rU, 1)");
  EXPECT_EQ(make_generator(Word{}), (ActionElement{Word{}, true}));
  EXPECT_EQ(generator_text(parse_word("ru")), "g[ru]");
}

TEST(Generator, ReflectionsAreInvolutions) {
  for (const Word& w : enumerate_ball(3)) {
    const ActionElement g = make_generator(w);
    EXPECT_TRUE(compose(g, g).is_identity()) << to_string(w);
    EXPECT_EQ(invert(g), g);
    EXPECT_EQ(apply_word(g, w), w);  // g_w fixes its own room
  }
}

TEST(Group, Laws) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 500; ++k) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_TRUE(compose(a, invert(a)).is_identity());
    EXPECT_TRUE(compose(invert(a), a).is_identity());
    EXPECT_EQ(compose(a, ActionElement::identity()), a);
    const Word v = random_word(rng, 6);
    EXPECT_EQ(apply_word(compose(a, b), v), apply_word(a, apply_word(b, v)));
  }
}

// Products g_{w_1} ... g_{w_n} against the defining formula applied right to left.
TEST(OracleEquivalence, ComposeMatchesNaiveApplication) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> length(0, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Word> roots(static_cast<std::size_t>(length(rng)));
    for (auto& w : roots) w = random_word(rng, 3);
    ActionElement g = ActionElement::identity();
    for (const auto& w : roots) g = compose(g, make_generator(w));
    EXPECT_EQ(g.parity, roots.size() % 2 == 1);
    for (int probe = 0; probe < 4; ++probe) {
      const Word v = probe == 0 ? Word{} : random_word(rng, 5);
      Word naive = v;
      for (auto it = roots.rbegin(); it != roots.rend(); ++it) naive = reflect_room(*it, naive);
      EXPECT_EQ(apply_word(g, v), naive);
      if (probe == 0) {
        EXPECT_EQ(g.spine, naive);
      }
    }
  }
}

TEST(GroupBall, SpineExponentSumVanishes) {
  std::vector<Word> roots = enumerate_ball(2);
  const auto ball = enumerate_group_ball(roots, 5);
  std::size_t bad = 0;
  for (const auto& g : ball) bad += exponent_sum(g.spine) != 0;
  EXPECT_EQ(bad, 0u);
  EXPECT_EQ(ball.size(), 604850u);
}

TEST(GroupBall, SmallCasesAndOrdering) {
  const std::vector<Word> roots{Word{}};
  EXPECT_EQ(enumerate_group_ball(roots, 0).size(), 1u);
  EXPECT_EQ(enumerate_group_ball(roots, 3).size(), 2u);  // g_e is an involution
  const auto ball = enumerate_group_ball(enumerate_ball(1), 2);
  EXPECT_TRUE(std::is_sorted(ball.begin(), ball.end()));
  EXPECT_EQ(std::set<ActionElement>(ball.begin(), ball.end()).size(), ball.size());
}

TEST(WeightedBall, SizesAndStructure) {
  EXPECT_EQ(enumerate_weighted_ball(0).size(), 1u);
  EXPECT_EQ(enumerate_weighted_ball(1).size(), 6u);
  EXPECT_EQ(enumerate_weighted_ball(4).size(), 1082u);
  const auto b3 = enumerate_weighted_ball(3);
  const auto b4 = enumerate_weighted_ball(4);
  const std::set<ActionElement> s4(b4.begin(), b4.end());
  for (const auto& g : b3) {
    EXPECT_TRUE(s4.contains(g));
    EXPECT_TRUE(s4.contains(invert(g)));
  }
  for (int i = -4; i <= 4; ++i) {
    EXPECT_TRUE(s4.contains(make_generator(Word::r_power(i))));
    if (std::abs(i) == 4) {
      EXPECT_FALSE(std::binary_search(b3.begin(), b3.end(), make_generator(Word::r_power(i))));
    }
  }
}

TEST(SpineWalk, LandsOnTheSpine) {
  for (const Word& v : enumerate_ball(6)) {
    const SpineWalk walk = walk_to_spine(v);
    EXPECT_EQ(apply_word(walk.element, v), Word::r_power(walk.index)) << to_string(v);
    ActionElement replay = ActionElement::identity();
    for (const auto& w : walk.roots) replay = compose(make_generator(w), replay);
    EXPECT_EQ(replay, walk.element);
  }
}

// For v = r^i u^j r^k u^l the product g_{r^i u^j r^k} g_{r^i u^j} g_{r^i}
// carries a spine room onto v; its inverse is the walk.
TEST(SpineWalk, MatchesThreeReflectionProduct) {
  for (int i = -2; i <= 2; ++i)
    for (int j : {-2, -1, 1, 2})
      for (int k : {-2, -1, 1, 2})
        for (int l : {-1, 1}) {
          const Word a = Word::r_power(i);
          const Word b = a * Word::u_power(j);
          const Word c = b * Word::r_power(k);
          const Word v = c * Word::u_power(l);
          const ActionElement h = compose(make_generator(c), compose(make_generator(b), make_generator(a)));
          const SpineWalk walk = walk_to_spine(v);
          EXPECT_EQ(invert(h), walk.element) << to_string(v);
          EXPECT_EQ(apply_word(h, Word::r_power(walk.index)), v);
        }
}

TEST(Text, ElementRoundTrip) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 200; ++k) {
    const auto g = random_element(rng);
    EXPECT_EQ(parse_action_element(to_string(g)), g);
  }
  EXPECT_THROW(parse_action_element("(r, 2)"), std::invalid_argument);
}

// Census against brute force: all reflection sequences of length <= d, and all
// reduced letter strings of each length with as many lower- as upper-case letters.
TEST(GroupBall, SZeroCensusMatchesBruteForce) {
  const std::vector<Word> roots = enumerate_ball(1);
  const unsigned max_len = 4;
  const auto census = s_zero_census(roots, 3, max_len);
  ASSERT_EQ(census.size(), 4u);

  std::vector<std::size_t> candidates(max_len + 1, 0);
  static const char kLetters[] = {'r', 'u', 'R', 'U'};
  for (unsigned len = 0; len <= max_len; ++len) {
    std::size_t total = 1;
    for (unsigned k = 0; k < len; ++k) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::string s;
      for (std::size_t c = code, k = 0; k < len; ++k, c /= 4) s.push_back(kLetters[c % 4]);
      bool reduced = true;
      int sum = 0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        sum += std::islower(static_cast<unsigned char>(s[k])) ? 1 : -1;
        if (k > 0 && s[k] != s[k - 1] && std::tolower(s[k]) == std::tolower(s[k - 1])) reduced = false;
      }
      if (reduced && sum == 0) candidates[len] += 2;
    }
  }

  std::set<ActionElement> reached{ActionElement::identity()};
  std::vector<ActionElement> frontier{ActionElement::identity()};
  for (unsigned d = 0; d <= 3; ++d) {
    if (d > 0) {
      std::vector<ActionElement> next;
      for (const auto& x : frontier)
        for (const auto& w : roots) {
          const ActionElement y = compose(make_generator(w), x);
          next.push_back(y);
          reached.insert(y);
        }
      frontier = std::move(next);
    }
    std::vector<std::size_t> realized(max_len + 1, 0);
    for (const auto& g : reached)
      if (g.spine.length() <= max_len) ++realized[g.spine.length()];
    EXPECT_EQ(census[d].elements, reached.size()) << d;
    EXPECT_EQ(census[d].s_nonzero, 0u);
    EXPECT_EQ(census[d].candidates, candidates);
    EXPECT_EQ(census[d].realized, realized) << d;
    for (unsigned l = 0; l <= max_len; ++l) EXPECT_LE(realized[l], candidates[l]);
  }
  // Length-zero pairs: (e, 0) and (e, 1) are both realized from depth 1.
  EXPECT_EQ(census[1].realized[0], 2u);
}
