#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fundreg {

/// Letters of the free group on {r, u}. The enumerator order r < u < r^-1 < u^-1
/// is the canonical order used for enumeration and reports.
enum class Generator : std::uint8_t { r = 0, u = 1, r_inv = 2, u_inv = 3 };

inline constexpr std::array<Generator, 4> kGenerators = {Generator::r, Generator::u, Generator::r_inv,
                                                         Generator::u_inv};

constexpr Generator inverse(Generator a) { return static_cast<Generator>(static_cast<std::uint8_t>(a) ^ 2u); }
constexpr Generator sigma(Generator a) { return static_cast<Generator>(static_cast<std::uint8_t>(a) ^ 1u); }
constexpr int sign(Generator a) { return static_cast<std::uint8_t>(a) < 2 ? 1 : -1; }
constexpr bool is_horizontal(Generator a) { return a == Generator::r || a == Generator::r_inv; }

/// Letter used in the text form: r, u, R (= r^-1), U (= u^-1).
char to_char(Generator a);

/// A freely reduced word in F2 = <r, u>. Reduction happens on construction, so
/// every instance is in canonical form and equality is letterwise.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Generator> letters);
  Word(std::initializer_list<Generator> letters);

  /// Builds r^n (n may be negative).
  static Word r_power(std::int64_t n);
  static Word u_power(std::int64_t n);

  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  /// Exponent k when the word is r^k, nothing otherwise.
  bool is_r_power(std::int64_t* exponent = nullptr) const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order over r < u < r^-1 < u^-1.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  std::vector<Generator> letters_;
};

Word concat(const Word& a, const Word& b);
Word inverse(const Word& a);
Word sigma(const Word& a);
/// sigma applied `power` times; only the parity of `power` matters.
Word sigma_pow(const Word& a, unsigned power);

/// Exponent sum: r and u count +1, their inverses -1.
std::int64_t exponent_sum(const Word& a);

/// Abelianization F2 -> Z^2, r -> (1,0), u -> (0,1).
std::pair<std::int64_t, std::int64_t> fmap(const Word& a);

inline Word operator*(const Word& a, const Word& b) { return concat(a, b); }

/// All reduced words of length <= radius, breadth-first and in shortlex order.
std::vector<Word> enumerate_ball(unsigned radius);

/// Closed-form size of the word ball: 1 + 2 (3^radius - 1).
std::size_t ball_size(unsigned radius);

/// Text form over {r,u,R,U}; the identity renders as "e".
std::string to_string(const Word& w);
/// Inverse of to_string. Accepts unreduced input and reduces it.
Word parse_word(std::string_view text);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace fundreg
