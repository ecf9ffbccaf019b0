#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace monocomp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(std::int64_t p, std::int64_t q = 1) {
  if (q == 0) throw Error("rational with zero denominator");
  return Rational(Integer(p), Integer(q));
}

// Exact form "p/q" (or "p" when the denominator is 1).
inline std::string to_string(const Rational& q) {
  std::string s = numerator_of(q).str();
  if (denominator_of(q) != 1) s += "/" + denominator_of(q).str();
  return s;
}

inline long double to_long_double(const Rational& q) { return q.convert_to<long double>(); }

// Decimal rendering with `digits` digits after the point.
inline std::string to_decimal(long double v, int digits = 12) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

inline std::string to_decimal(const Rational& q, int digits = 12) {
  return to_decimal(to_long_double(q), digits);
}

// Parses "p", "p/q", or a finite decimal such as "0.25".
inline Rational parse_rational(std::string_view text) {
  auto bad = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw bad();
    Integer v(std::string(s.substr(i)));
    return s[0] == '-' ? Integer(-v) : v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    std::string_view whole = text.substr(0, dot);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer w = parse_int(whole);
    Integer f = frac.empty() ? Integer(0) : parse_int(frac);
    if (f < 0) throw bad();
    Integer num = (w < 0 ? Integer(-w) : w) * scale + f;
    return Rational(negative ? Integer(-num) : num, scale);
  }
  return Rational(parse_int(text));
}

}  // namespace monocomp
