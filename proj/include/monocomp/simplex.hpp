#pragma once

#include <vector>

#include "monocomp/rational.hpp"

namespace monocomp {

class UnboundedProgram : public Error {
 public:
  UnboundedProgram() : Error("linear program is unbounded") {}
};

struct SimplexSolution {
  Rational objective;
  std::vector<Rational> primal;  // one value per variable
  std::vector<Rational> dual;    // one multiplier per constraint row
  std::size_t pivots = 0;
};

// Exact primal simplex with Bland's rule for
//   maximize c.y  subject to  A y <= b,  y >= 0,
// where b >= 0 so the slack basis is feasible from the start. The returned
// duals are the optimal multipliers of the rows of A.
inline SimplexSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                                        const std::vector<Rational>& c) {
  const std::size_t m = b.size(), n = c.size(), width = n + m + 1;
  if (a.size() != m) throw Error("constraint matrix row count mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw Error("constraint matrix column count mismatch");
  for (const auto& v : b)
    if (v < 0) throw Error("right-hand side must be nonnegative");

  // Rows 0..m-1 are constraints; row m is the objective row holding
  // reduced costs (negative means improving) and minus the objective value.
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  SimplexSolution out;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw UnboundedProgram();

    Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.objective = t[m][width - 1];
  out.primal.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) out.primal[basis[i]] = t[i][width - 1];
  out.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.dual[i] = t[m][n + i];
  return out;
}

}  // namespace monocomp
