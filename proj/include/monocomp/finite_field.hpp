#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "monocomp/rational.hpp"

namespace monocomp {

// GF(q) with elements 0..q-1. For q = p^k an element is the base-p number
// whose digits are the coefficients of a polynomial of degree < k, reduced
// modulo a stored irreducible polynomial.
class FiniteField {
 public:
  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const {
    if (a == 0) throw Error("zero has no multiplicative inverse");
    return inv_[static_cast<std::size_t>(a)];
  }

  friend FiniteField make_field(int q);

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct StoredModulus {
  int q, p, k;
  // Coefficients c_0..c_{k-1} of the monic modulus x^k + c_{k-1} x^{k-1} + ... + c_0.
  std::array<int, 4> low;
};

// Irreducible moduli for the supported non-prime orders.
inline constexpr std::array<StoredModulus, 6> kStoredModuli{{
    {4, 2, 2, {1, 1, 0, 0}},   // x^2 + x + 1
    {8, 2, 3, {1, 1, 0, 0}},   // x^3 + x + 1
    {16, 2, 4, {1, 1, 0, 0}},  // x^4 + x + 1
    {9, 3, 2, {1, 0, 0, 0}},   // x^2 + 1
    {25, 5, 2, {2, 0, 0, 0}},  // x^2 + 2
    {27, 3, 3, {1, 2, 0, 0}},  // x^3 + 2x + 1
}};

}  // namespace detail

// Table size grows as q^2; larger primes are refused.
inline constexpr int kMaxPrimeOrder = 997;

inline constexpr std::array<int, 12> kListedFieldOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

inline bool field_order_supported(int q) {
  if (q >= 2 && q <= kMaxPrimeOrder && detail::is_prime(q)) return true;
  for (const auto& m : detail::kStoredModuli)
    if (m.q == q) return true;
  return false;
}

inline FiniteField make_field(int q) {
  FiniteField f;
  std::optional<detail::StoredModulus> modulus;
  if (q >= 2 && q <= kMaxPrimeOrder && detail::is_prime(q)) {
    modulus = detail::StoredModulus{q, q, 1, {0, 0, 0, 0}};
  } else {
    for (const auto& m : detail::kStoredModuli)
      if (m.q == q) modulus = m;
  }
  if (!modulus)
    throw Error("field order " + std::to_string(q) +
                " is not supported: need a prime up to " + std::to_string(kMaxPrimeOrder) + " or one of 4, 8, 9, 16, 25, 27");
  const int p = modulus->p, k = modulus->k;
  f.q_ = q;
  f.p_ = p;
  f.k_ = k;
  const auto qq = static_cast<std::size_t>(q);
  f.add_.assign(qq * qq, 0);
  f.mul_.assign(qq * qq, 0);
  f.neg_.assign(qq, 0);
  f.inv_.assign(qq, 0);

  auto digits = [&](int a) {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, a /= p) d[static_cast<std::size_t>(i)] = a % p;
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * p + d[static_cast<std::size_t>(i)];
    return a;
  };

  for (int a = 0; a < q; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<int> sum(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (da[i] + db[i]) % p;
      f.add_[f.idx(a, b)] = pack(sum);

      // Schoolbook product, then reduce x^m for m >= k using the modulus.
      std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
      for (int m = 2 * k - 2; m >= k; --m) {
        int c = prod[static_cast<std::size_t>(m)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(m)] = 0;
        for (int i = 0; i < k; ++i) {
          auto at = static_cast<std::size_t>(m - k + i);
          prod[at] = ((prod[at] - c * modulus->low[static_cast<std::size_t>(i)]) % p + p) % p;
        }
      }
      prod.resize(static_cast<std::size_t>(k));
      f.mul_[f.idx(a, b)] = pack(prod);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) == 0) f.neg_[static_cast<std::size_t>(a)] = b;
      if (a != 0 && f.mul(a, b) == 1) f.inv_[static_cast<std::size_t>(a)] = b;
    }
    if (a != 0 && f.mul(a, f.inv_[static_cast<std::size_t>(a)]) != 1)
      throw Error("stored modulus for order " + std::to_string(q) + " is reducible");
  }
  return f;
}

}  // namespace monocomp
