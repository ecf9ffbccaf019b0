#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "monocomp/rational.hpp"

namespace monocomp {

namespace detail {

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Returns the largest s with s*s <= v.
inline Integer isqrt(const Integer& v) { return boost::multiprecision::sqrt(v); }

}  // namespace detail

// Exact real number of the form a + b*sqrt(d) with a, b rational and d a
// nonnegative integer. Arithmetic between two values requires a common
// radicand unless one of them is rational; comparison works for any pair.
class QuadIrrational {
 public:
  QuadIrrational() = default;
  QuadIrrational(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadIrrational(std::int64_t a) : a_(a) {}     // NOLINT(google-explicit-constructor)
  QuadIrrational(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
    if (d_ < 0) throw Error("negative radicand");
    normalize();
  }

  // sqrt(q) for rational q >= 0.
  static QuadIrrational sqrt(const Rational& q) {
    if (q < 0) throw Error("square root of a negative rational");
    Integer den = denominator_of(q);
    return QuadIrrational(0, Rational(Integer(1), den), numerator_of(q) * den);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coefficient() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const {
    int sa = detail::sign_of(a_), sb = detail::sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational diff = a_ * a_ - b_ * b_ * Rational(d_);
    int sd = detail::sign_of(diff);
    return sd > 0 ? sa : (sd < 0 ? sb : 0);
  }

  QuadIrrational operator-() const { return QuadIrrational(-a_, -b_, d_); }

  friend QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y) {
    return QuadIrrational(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y));
  }
  friend QuadIrrational operator-(const QuadIrrational& x, const QuadIrrational& y) { return x + (-y); }
  friend QuadIrrational operator*(const QuadIrrational& x, const QuadIrrational& y) {
    Integer d = common_radicand(x, y);
    return QuadIrrational(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  QuadIrrational reciprocal() const {
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    if (norm == 0) throw Error("reciprocal of zero");
    return QuadIrrational(a_ / norm, -b_ / norm, d_);
  }
  friend QuadIrrational operator/(const QuadIrrational& x, const QuadIrrational& y) {
    return x * y.reciprocal();
  }
  QuadIrrational& operator+=(const QuadIrrational& y) { return *this = *this + y; }
  QuadIrrational& operator-=(const QuadIrrational& y) { return *this = *this - y; }
  QuadIrrational& operator*=(const QuadIrrational& y) { return *this = *this * y; }

  // Exact three-way comparison, also across different radicands.
  friend std::strong_ordering operator<=>(const QuadIrrational& x, const QuadIrrational& y) {
    int s = compare(x, y);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const QuadIrrational& x, const QuadIrrational& y) { return compare(x, y) == 0; }

  long double to_long_double() const {
    long double a = monocomp::to_long_double(a_);
    if (b_ == 0) return a;
    long double root = std::sqrt(d_.convert_to<long double>());
    long double br = monocomp::to_long_double(b_) * root;
    // a + b*sqrt(d) with opposite signs cancels; use the conjugate form instead.
    if ((a > 0) != (br > 0) && a != 0) {
      long double norm = monocomp::to_long_double(Rational(a_ * a_ - b_ * b_ * Rational(d_)));
      return norm / (a - br);
    }
    return a + br;
  }

  // "a", "b*sqrt(d)", or "a + b*sqrt(d)" with exact rational coefficients.
  std::string to_string() const {
    if (b_ == 0) return monocomp::to_string(a_);
    std::string radical = (b_ == 1 ? std::string() : (b_ == -1 ? std::string("-") : monocomp::to_string(b_) + "*")) +
                          "sqrt(" + d_.str() + ")";
    if (a_ == 0) return radical;
    if (b_ < 0) {
      std::string pos = (b_ == -1 ? std::string() : monocomp::to_string(Rational(-b_)) + "*") + "sqrt(" + d_.str() + ")";
      return monocomp::to_string(a_) + " - " + pos;
    }
    return monocomp::to_string(a_) + " + " + radical;
  }

 private:
  static Integer common_radicand(const QuadIrrational& x, const QuadIrrational& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0 || x.d_ == y.d_) return x.d_;
    throw Error("quadratic irrationals with different radicands");
  }

  static int compare(const QuadIrrational& x, const QuadIrrational& y) {
    if (x.b_ == 0 || y.b_ == 0 || x.d_ == y.d_) return (x - y).sign();
    // (x.a - y.a + x.b*sqrt(x.d)) + (-y.b*sqrt(y.d))
    QuadIrrational first(x.a_ - y.a_, x.b_, x.d_);
    QuadIrrational second(0, -y.b_, y.d_);
    int s1 = first.sign(), s2 = second.sign();
    if (s1 == 0) return s2;
    if (s2 == 0 || s1 == s2) return s1;
    int s = (first * first - second * second).sign();
    return s > 0 ? s1 : (s < 0 ? s2 : 0);
  }

  void normalize() {
    if (b_ == 0 || d_ == 0) {
      b_ = 0;
      d_ = 0;
      return;
    }
    // Pull out small square factors so that radicands stay readable.
    for (Integer p = 2; p * p <= d_ && p < 1000; ++p) {
      Integer sq = p * p;
      while (d_ % sq == 0) {
        d_ /= sq;
        b_ *= Rational(p);
      }
    }
    Integer root = detail::isqrt(d_);
    if (root * root == d_) {
      a_ += b_ * Rational(root);
      b_ = 0;
      d_ = 0;
    }
  }

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

inline std::string to_string(const QuadIrrational& v) { return v.to_string(); }
inline std::string to_decimal(const QuadIrrational& v, int digits = 12) {
  return to_decimal(v.to_long_double(), digits);
}

}  // namespace monocomp
