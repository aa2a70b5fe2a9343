#include "fundreg/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace fundreg {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::int64_t floor(const Rational& q) {
  const auto n = q.numerator();
  const auto d = q.denominator();  // always positive after normalization
  auto f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

}  // namespace fundreg
