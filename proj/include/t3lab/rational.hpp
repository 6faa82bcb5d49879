#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

// Mixed comparisons of rational<int64_t> with int recurse forever in some
// Boost releases; these exact overloads take precedence over the templates.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(int a, const rational<std::int64_t>& b) {
  return rational<std::int64_t>(a) == b;
}
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(int a, const rational<std::int64_t>& b) { return !(a == b); }
inline bool operator<=(const rational<std::int64_t>& a, int b) { return !(a > b); }
inline bool operator>=(const rational<std::int64_t>& a, int b) { return !(a < b); }
inline bool operator<=(int a, const rational<std::int64_t>& b) { return !(b < a); }
inline bool operator>=(int a, const rational<std::int64_t>& b) { return !(b > a); }
}  // namespace boost

namespace t3lab {

using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Parses the to_string form.
Rational parse_rational(const std::string& text);

// Smallest integer >= q.
std::int64_t ceil(const Rational& q);

// A rational extended by +infinity; used where one side of a bound is an
// eta value.
struct ExtRational {
  bool infinite = false;
  Rational value{0};

  static ExtRational inf() { return {true, Rational{0}}; }
  static ExtRational of(Rational q) { return {false, q}; }

  friend bool operator>=(const ExtRational& a, const ExtRational& b) {
    if (a.infinite) return true;
    if (b.infinite) return false;
    return a.value >= b.value;
  }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

std::string to_string(const ExtRational& q);

}  // namespace t3lab
