#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "fundreg/freegroup.hpp"

using namespace fundreg;

namespace {

// Independent reference: words as strings over "ruRU", reduced by repeated
// cancellation of adjacent inverse pairs.
std::string naive_reduce(std::string s) {
  auto inv = [](char c) {
    switch (c) {
      case 'r': return 'R';
      case 'R': return 'r';
      case 'u': return 'U';
      default: return 'u';
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i + 1] == inv(s[i])) {
        s.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return s.empty() ? "e" : s;
}

std::string random_letters(std::mt19937_64& rng, std::size_t max_len) {
  static const char kLetters[] = "ruRU";
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::string s(len(rng), 'r');
  for (char& c : s) c = kLetters[pick(rng)];
  return s;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len = 10) {
  return parse_word(random_letters(rng, max_len));
}

}  // namespace

TEST(Word, ReducesOnConstruction) {
  EXPECT_TRUE((Word{Generator::r, Generator::r_inv}).is_identity());
  EXPECT_EQ((Word{Generator::r, Generator::u, Generator::u_inv, Generator::r}), Word::r_power(2));
  EXPECT_EQ(to_string(Word{}), "e");
  EXPECT_EQ(to_string(Word::u_power(-3)), "UUU");
}

TEST(Word, ReductionMatchesNaiveCancellation) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const std::string s = random_letters(rng, 16);
    EXPECT_EQ(to_string(parse_word(s)), naive_reduce(s)) << s;
  }
}

TEST(Word, GroupLaws) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Word a = random_word(rng), b = random_word(rng), c = random_word(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * inverse(a)).is_identity());
    EXPECT_EQ(inverse(a * b), inverse(b) * inverse(a));
    EXPECT_EQ(a * Word{}, a);
  }
}

TEST(Word, SigmaIsAnInvolutiveAutomorphism) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 500; ++k) {
    const Word a = random_word(rng), b = random_word(rng);
    EXPECT_EQ(sigma(a * b), sigma(a) * sigma(b));
    EXPECT_EQ(sigma(sigma(a)), a);
    EXPECT_EQ(sigma_pow(a, 2), a);
    EXPECT_EQ(sigma_pow(a, 3), sigma(a));
  }
  EXPECT_EQ(sigma(Word::r_power(2)), Word::u_power(2));
}

TEST(Word, ExponentSumAndAbelianizationAreHomomorphisms) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 500; ++k) {
    const Word a = random_word(rng), b = random_word(rng);
    EXPECT_EQ(exponent_sum(a * b), exponent_sum(a) + exponent_sum(b));
    const auto fa = fmap(a), fb = fmap(b), fab = fmap(a * b);
    EXPECT_EQ(fab.first, fa.first + fb.first);
    EXPECT_EQ(fab.second, fa.second + fb.second);
    EXPECT_EQ(exponent_sum(sigma(a)), exponent_sum(a));
  }
  EXPECT_EQ(exponent_sum(parse_word("rrU")), 1);
  EXPECT_EQ(fmap(parse_word("rrU")), (std::pair<std::int64_t, std::int64_t>{2, -1}));
}

TEST(Word, RPowerRecognition) {
  std::int64_t k = 0;
  EXPECT_TRUE(Word::r_power(-4).is_r_power(&k));
  EXPECT_EQ(k, -4);
  EXPECT_TRUE(Word{}.is_r_power(&k));
  EXPECT_EQ(k, 0);
  EXPECT_FALSE(parse_word("ru").is_r_power());
}

TEST(Ball, SizesMatchBruteForce) {
  for (unsigned r = 0; r <= 6; ++r) {
    std::set<std::string> reduced;
    std::vector<std::string> frontier{""};
    for (unsigned len = 0; len <= r; ++len) {
      std::vector<std::string> next;
      for (const auto& s : frontier) {
        reduced.insert(naive_reduce(s));
        if (len < r)
          for (char c : std::string("ruRU")) next.push_back(s + c);
      }
      frontier = std::move(next);
    }
    EXPECT_EQ(enumerate_ball(r).size(), reduced.size()) << r;
    EXPECT_EQ(ball_size(r), reduced.size()) << r;
  }
  EXPECT_EQ(ball_size(3), 53u);
}

TEST(Ball, ShortlexSortedAndDistinct) {
  const auto ball = enumerate_ball(4);
  for (std::size_t i = 1; i < ball.size(); ++i) {
    EXPECT_LT(ball[i - 1], ball[i]);
    EXPECT_LE(ball[i - 1].length(), ball[i].length());
  }
  EXPECT_TRUE(ball.front().is_identity());
}

TEST(Text, RoundTripAndErrors) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    const Word w = random_word(rng);
    EXPECT_EQ(parse_word(to_string(w)), w);
  }
  EXPECT_TRUE(parse_word("e").is_identity());
  EXPECT_TRUE(parse_word("uU").is_identity());
  EXPECT_THROW(parse_word("rx"), std::invalid_argument);
}

TEST(Hash, EqualWordsHashEqually) {
  EXPECT_EQ(WordHash{}(parse_word("ruU")), WordHash{}(parse_word("r")));
  EXPECT_NE(WordHash{}(parse_word("ru")), WordHash{}(parse_word("ur")));
}
