#include "t3lab/rational.hpp"

#include <charconv>

#include "t3lab/errors.hpp"

namespace t3lab {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const ExtRational& q) {
  return q.infinite ? std::string("inf") : to_string(q.value);
}

namespace {
std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("not an integer: '" + std::string(s) + "'");
  }
  return value;
}
}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational{parse_int(text)};
  const std::string_view view(text);
  const auto den = parse_int(view.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator: '" + text + "'");
  return Rational{parse_int(view.substr(0, slash)), den};
}

std::int64_t ceil(const Rational& q) {
  const auto n = q.numerator();
  const auto d = q.denominator();  // boost keeps d > 0
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

}  // namespace t3lab
