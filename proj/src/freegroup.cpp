#include "fundreg/freegroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace fundreg {

char to_char(Generator a) {
  switch (a) {
    case Generator::r: return 'r';
    case Generator::u: return 'u';
    case Generator::r_inv: return 'R';
    case Generator::u_inv: return 'U';
  }
  return '?';
}

namespace {

// Stack reduction: push each letter, cancel against the top when inverse.
void push_reduced(std::vector<Generator>& stack, Generator a) {
  if (!stack.empty() && stack.back() == inverse(a))
    stack.pop_back();
  else
    stack.push_back(a);
}

}  // namespace

Word::Word(std::span<const Generator> letters) {
  letters_.reserve(letters.size());
  for (auto a : letters) push_reduced(letters_, a);
}

Word::Word(std::initializer_list<Generator> letters)
    : Word(std::span<const Generator>(letters.begin(), letters.size())) {}

Word Word::r_power(std::int64_t n) {
  Word w;
  w.letters_.assign(static_cast<std::size_t>(n < 0 ? -n : n), n < 0 ? Generator::r_inv : Generator::r);
  return w;
}

Word Word::u_power(std::int64_t n) {
  Word w;
  w.letters_.assign(static_cast<std::size_t>(n < 0 ? -n : n), n < 0 ? Generator::u_inv : Generator::u);
  return w;
}

bool Word::is_r_power(std::int64_t* exponent) const noexcept {
  if (letters_.empty()) {
    if (exponent) *exponent = 0;
    return true;
  }
  const auto first = letters_.front();
  if (!is_horizontal(first)) return false;
  // Reduced, so a pure r-power has no mixed signs.
  if (!std::all_of(letters_.begin(), letters_.end(), [first](Generator a) { return a == first; })) return false;
  if (exponent) *exponent = sign(first) * static_cast<std::int64_t>(letters_.size());
  return true;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

Word concat(const Word& a, const Word& b) {
  std::vector<Generator> letters = a.letters();
  letters.reserve(a.length() + b.length());
  for (auto g : b.letters()) push_reduced(letters, g);
  return Word(letters);
}

Word inverse(const Word& a) {
  std::vector<Generator> letters(a.letters().rbegin(), a.letters().rend());
  for (auto& g : letters) g = inverse(g);
  return Word(letters);
}

Word sigma(const Word& a) {
  std::vector<Generator> letters = a.letters();
  for (auto& g : letters) g = sigma(g);
  return Word(letters);
}

Word sigma_pow(const Word& a, unsigned power) { return power % 2 ? sigma(a) : a; }

std::int64_t exponent_sum(const Word& a) {
  std::int64_t s = 0;
  for (auto g : a.letters()) s += sign(g);
  return s;
}

std::pair<std::int64_t, std::int64_t> fmap(const Word& a) {
  std::pair<std::int64_t, std::int64_t> v{0, 0};
  for (auto g : a.letters()) (is_horizontal(g) ? v.first : v.second) += sign(g);
  return v;
}

std::vector<Word> enumerate_ball(unsigned radius) {
  std::vector<Word> ball{Word{}};
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::size_t level_begin = 0;
  for (unsigned len = 1; len <= radius; ++len) {
    const std::size_t level_end = ball.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (auto g : kGenerators) {
        Word next = concat(ball[i], Word{g});
        if (next.length() != len) continue;
        if (seen.insert(next).second) ball.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

std::size_t ball_size(unsigned radius) {
  std::size_t pow3 = 1;
  for (unsigned i = 0; i < radius; ++i) pow3 *= 3;
  return 1 + 2 * (pow3 - 1);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "e";
  std::string s;
  s.reserve(w.length());
  for (auto g : w.letters()) s.push_back(to_char(g));
  return s;
}

Word parse_word(std::string_view text) {
  if (text == "e" || text.empty()) return Word{};
  std::vector<Generator> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'r': letters.push_back(Generator::r); break;
      case 'u': letters.push_back(Generator::u); break;
      case 'R': letters.push_back(Generator::r_inv); break;
      case 'U': letters.push_back(Generator::u_inv); break;
      default: throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
    }
  }
  return Word(letters);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over letters, two bits of state per letter.
  std::size_t h = 1469598103934665603ull;
  for (auto g : w.letters()) {
    h ^= static_cast<std::size_t>(g) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fundreg
