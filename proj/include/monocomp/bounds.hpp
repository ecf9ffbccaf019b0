#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monocomp/components.hpp"
#include "monocomp/quadratic.hpp"
#include "monocomp/rational.hpp"
#include "monocomp/simplex.hpp"

namespace monocomp {

// (r, gamma, x): r colors, a coverage level gamma in [0, r] and a total
// component weight x >= 0.
struct BoundQuery {
  int r = 0;
  Rational gamma;
  Rational x;

  void validate() const {
    if (r < 1) throw Error("bound query needs r >= 1");
    if (gamma < 0 || gamma > r) throw Error("gamma must lie in [0, r]");
    if (x < 0) throw Error("x must be nonnegative");
  }
};

// Smallest z allowed by z(r-gamma)^2 >= max(1-xz, 0)^2, i.e. every
// coloring admitting such a weighting has a component with at least
// z*C(n,2) edges. For x > 0 this is 2/((r-gamma)^2 + 2x + sqrt(((r-gamma)^2+2x)^2 - 4x^2));
// for x = 0 it is 1/(r-gamma)^2.
inline QuadIrrational z_lower_bound(const BoundQuery& q) {
  q.validate();
  const Rational slack = Rational(q.r) - q.gamma;
  if (q.x == 0) {
    if (slack == 0) throw Error("z_lower_bound is undefined for x = 0 and gamma = r");
    return QuadIrrational(Rational(1) / (slack * slack));
  }
  const Rational s = slack * slack + 2 * q.x;
  const Rational disc = s * s - 4 * q.x * q.x;
  QuadIrrational denom = QuadIrrational(s) + QuadIrrational::sqrt(disc);
  return QuadIrrational(2) * denom.reciprocal();
}

// z(r-gamma)^2 >= max(1 - xz, 0)^2.
inline bool check_main_inequality(const BoundQuery& q, const QuadIrrational& z) {
  q.validate();
  if (z.sign() < 0) throw Error("z must be nonnegative");
  const Rational slack = Rational(q.r) - q.gamma;
  QuadIrrational lhs = z * QuadIrrational(slack * slack);
  QuadIrrational rest = QuadIrrational(1) - QuadIrrational(q.x) * z;
  if (rest.sign() < 0) rest = QuadIrrational(0);
  return lhs >= rest * rest;
}

// 1/z - (r-gamma)/sqrt(z): the largest total weight x for which a weighting
// with coverage gamma forces a component with z*C(n,2) edges.
inline QuadIrrational x_threshold(int r, const Rational& gamma, const Rational& z) {
  if (z <= 0) throw Error("x_threshold needs z > 0");
  if (gamma < 0 || gamma > r) throw Error("gamma must lie in [0, r]");
  Rational inv = Rational(1) / z;
  return QuadIrrational(inv) - QuadIrrational(Rational(r) - gamma) * QuadIrrational::sqrt(inv);
}

// x <= 1/z - (r-gamma)/sqrt(z), evaluated as x z + (r-gamma) sqrt(z) <= 1
// without forming sqrt(z).
inline bool within_x_threshold(int r, const Rational& x, const Rational& gamma, const QuadIrrational& z) {
  if (z.sign() <= 0) throw Error("z must be positive");
  const Rational slack = Rational(r) - gamma;
  if (slack < 0) throw Error("gamma must not exceed r");
  QuadIrrational rest = QuadIrrational(1) - QuadIrrational(x) * z;
  if (rest.sign() < 0) return false;
  return QuadIrrational(slack * slack) * z <= rest * rest;
}

// Sign of (x1 + (r-g1)/sqrt(z)) - (x2 + (r-g2)/sqrt(z)).
inline int compare_rounding_objective(const Rational& x1, const Rational& g1, const Rational& x2, const Rational& g2,
                                      const QuadIrrational& z) {
  if (z.sign() <= 0) throw Error("z must be positive");
  // Multiply by sqrt(z) > 0: (x1-x2) sqrt(z) + (g2-g1).
  Rational p = x1 - x2, q = g2 - g1;
  int sp = p > 0 ? 1 : (p < 0 ? -1 : 0), sq = q > 0 ? 1 : (q < 0 ? -1 : 0);
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  int s = (QuadIrrational(p * p) * z - QuadIrrational(q * q)).sign();
  return s > 0 ? sp : (s < 0 ? sq : 0);
}

// Exact integer check of z(r-gamma)^2 >= max(1-xz,0)^2 for z = max_edges/C(n,2),
// x = subset size and gamma = vertex_total/n.
inline bool main_inequality_holds(int n, int r, std::int64_t vertex_total, std::int64_t subset_size,
                                  std::int64_t max_edges) {
  using Wide = __int128;
  const Wide pairs = choose2(n);
  const Wide slack = Wide(r) * n - vertex_total;
  const Wide lhs = Wide(max_edges) * slack * slack * pairs;
  Wide rest = pairs - Wide(subset_size) * max_edges;
  if (rest < 0) rest = 0;
  return lhs >= Wide(n) * n * rest * rest;
}

// Weights on components, indexed like ComponentDecomposition::components().
struct Weighting {
  std::vector<Rational> weights;

  static Weighting uniform(const ComponentDecomposition& d, const Rational& w) {
    return Weighting{std::vector<Rational>(d.size(), w)};
  }
};

struct WeightingSummary {
  Rational x;            // sum of weights
  Rational gamma_total;  // (1/n) sum_C w(C)|V(C)|
  Rational gamma_min;    // min over vertices of sum_{C containing v} w(C)
};

inline WeightingSummary evaluate_weighting(const ComponentDecomposition& d, const Weighting& w) {
  if (w.weights.size() != d.size())
    throw Error("weighting has " + std::to_string(w.weights.size()) + " entries for " + std::to_string(d.size()) +
                " components");
  WeightingSummary s;
  Rational mass = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational& wi = w.weights[i];
    if (wi < 0 || wi > 1) throw Error("weight of component " + std::to_string(i) + " is outside [0, 1]");
    s.x += wi;
    mass += wi * Rational(static_cast<std::int64_t>(d.component(i).size()));
  }
  s.gamma_total = mass / Rational(d.n());
  for (Vertex v = 0; v < d.n(); ++v) {
    Rational cover = 0;
    for (Color c = 0; c < d.r(); ++c) cover += w.weights[d.component_of(c, v)];
    if (v == 0 || cover < s.gamma_min) s.gamma_min = cover;
  }
  if (s.gamma_min > s.gamma_total) throw Error("internal: gamma_min exceeds gamma_total");
  return s;
}

struct RoundingResult {
  std::vector<std::size_t> subset;  // chosen component indices, ascending
  Rational x;                       // |subset|
  Rational gamma;                   // sum of |V(C)| over the subset, divided by n
};

// Derandomized rounding of a fractional weighting. Each fractional weight is
// fixed to 0 or 1, picking the branch that does not raise the conditional
// expectation of x + (r - gamma)/sqrt(z); integral weights are kept.
inline RoundingResult round_weighting(const ComponentDecomposition& d, const Weighting& w, const QuadIrrational& z) {
  WeightingSummary s = evaluate_weighting(d, w);
  if (z.sign() <= 0) throw Error("round_weighting needs z > 0");
  if (!within_x_threshold(d.r(), s.x, s.gamma_total, z))
    throw Error("weighting violates x <= 1/z - (r-gamma)/sqrt(z) (x = " + to_string(s.x) +
                ", gamma = " + to_string(s.gamma_total) + ")");
  // The expectation is linear; component C contributes w(C)(1 - |V(C)|/(n sqrt(z))).
  const QuadIrrational n2z = QuadIrrational(Rational(d.n()) * Rational(d.n())) * z;
  RoundingResult out;
  std::int64_t vertex_total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational& wi = w.weights[i];
    bool take = wi == 1;
    if (wi > 0 && wi < 1) {
      const auto size = static_cast<std::int64_t>(d.component(i).size());
      take = QuadIrrational(size * size) > n2z;
    }
    if (take) {
      out.subset.push_back(i);
      vertex_total += static_cast<std::int64_t>(d.component(i).size());
    }
  }
  out.x = Rational(static_cast<std::int64_t>(out.subset.size()));
  out.gamma = Rational(vertex_total) / Rational(d.n());
  if (compare_rounding_objective(out.x, out.gamma, s.x, s.gamma_total, z) > 0)
    throw Error("internal: rounding increased the objective");
  return out;
}

// Optimal fractional cover with its certificate. The cover LP is
//   min sum_C w(C)  s.t.  sum_{C containing v} w(C) >= gamma,  0 <= w <= 1,
// with one row per equivalence class of vertices. The certificate is a
// feasible solution of the dual
//   max gamma sum_g y_g - sum_C u_C  s.t.  sum_{g in C} y_g - u_C <= 1,  y, u >= 0.
struct LpResult {
  Rational gamma;
  Rational optimum;
  Weighting weights;
  std::vector<std::vector<Vertex>> row_classes;  // vertex classes sharing a constraint row
  std::vector<Rational> row_multipliers;         // y_g
  std::vector<Rational> bound_multipliers;       // u_C
  std::size_t pivots = 0;

  Rational dual_objective() const {
    Rational v = 0;
    for (const auto& y : row_multipliers) v += gamma * y;
    for (const auto& u : bound_multipliers) v -= u;
    return v;
  }
};

inline LpResult min_fractional_cover(const ComponentDecomposition& d, const Rational& gamma) {
  if (gamma < 0 || gamma > d.r()) throw Error("gamma must lie in [0, r]");
  LpResult res;
  res.gamma = gamma;
  res.row_classes = equivalence_classes(d);
  const std::size_t k = res.row_classes.size(), m = d.size();

  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + m));
  for (std::size_t g = 0; g < k; ++g) {
    Vertex rep = res.row_classes[g].front();
    for (Color c = 0; c < d.r(); ++c) a[d.component_of(c, rep)][g] = 1;
  }
  for (std::size_t i = 0; i < m; ++i) a[i][k + i] = -1;
  std::vector<Rational> b(m, Rational(1));
  std::vector<Rational> obj(k + m);
  for (std::size_t g = 0; g < k; ++g) obj[g] = gamma;
  for (std::size_t i = 0; i < m; ++i) obj[k + i] = -1;

  SimplexSolution sol = solve_packing_lp(a, b, obj);
  res.optimum = sol.objective;
  res.weights.weights = sol.dual;
  res.row_multipliers.assign(sol.primal.begin(), sol.primal.begin() + static_cast<std::ptrdiff_t>(k));
  res.bound_multipliers.assign(sol.primal.begin() + static_cast<std::ptrdiff_t>(k), sol.primal.end());
  res.pivots = sol.pivots;
  return res;
}

// Independent check of an LpResult: primal feasibility, dual feasibility
// and equal objectives, all in exact arithmetic.
inline bool verify_lp_certificate(const ComponentDecomposition& d, const LpResult& lp, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (lp.weights.weights.size() != d.size() || lp.bound_multipliers.size() != d.size() ||
      lp.row_multipliers.size() != lp.row_classes.size())
    return fail("certificate dimensions do not match the decomposition");
  Rational primal = 0;
  for (const auto& w : lp.weights.weights) {
    if (w < 0 || w > 1) return fail("primal weight outside [0, 1]");
    primal += w;
  }
  for (Vertex v = 0; v < d.n(); ++v) {
    Rational cover = 0;
    for (Color c = 0; c < d.r(); ++c) cover += lp.weights.weights[d.component_of(c, v)];
    if (cover < lp.gamma) return fail("vertex " + std::to_string(v) + " covered below gamma");
  }
  std::vector<Rational> load(d.size());
  std::vector<bool> seen(static_cast<std::size_t>(d.n()), false);
  for (std::size_t g = 0; g < lp.row_classes.size(); ++g) {
    if (lp.row_multipliers[g] < 0) return fail("negative row multiplier");
    const auto& cls = lp.row_classes[g];
    if (cls.empty()) return fail("empty row class");
    for (Vertex v : cls) {
      if (seen[static_cast<std::size_t>(v)]) return fail("row classes overlap");
      seen[static_cast<std::size_t>(v)] = true;
      for (Color c = 0; c < d.r(); ++c)
        if (d.component_of(c, v) != d.component_of(c, cls.front())) return fail("row class mixes membership vectors");
    }
    for (Color c = 0; c < d.r(); ++c) load[d.component_of(c, cls.front())] += lp.row_multipliers[g];
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return fail("row classes miss a vertex");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (lp.bound_multipliers[i] < 0) return fail("negative bound multiplier");
    if (load[i] - lp.bound_multipliers[i] > 1) return fail("dual constraint violated at component " + std::to_string(i));
  }
  if (primal != lp.dual_objective()) return fail("primal and dual objectives differ");
  if (primal != lp.optimum) return fail("reported optimum differs from the weights");
  return true;
}

namespace detail {

struct SupportLine {
  Rational slope;
  Rational intercept;
  Rational at(const Rational& g) const { return slope * g + intercept; }
  friend bool operator==(const SupportLine&, const SupportLine&) = default;
};

inline SupportLine support_line(const LpResult& lp) {
  SupportLine line;
  for (const auto& y : lp.row_multipliers) line.slope += y;
  for (const auto& u : lp.bound_multipliers) line.intercept -= u;
  return line;
}

inline void collect_breakpoints(const ComponentDecomposition& d, const Rational& lo, const SupportLine& left,
                                const Rational& hi, const SupportLine& right, std::vector<Rational>& out) {
  if (left.slope == right.slope) return;
  // Every dual-feasible line lies under x*(gamma); left and right are tight at lo and hi.
  Rational cross = (right.intercept - left.intercept) / (left.slope - right.slope);
  if (cross <= lo || cross >= hi) return;
  LpResult mid = min_fractional_cover(d, cross);
  if (mid.optimum == left.at(cross)) {
    out.push_back(cross);
    return;
  }
  SupportLine line = support_line(mid);
  collect_breakpoints(d, lo, left, cross, line, out);
  collect_breakpoints(d, cross, line, hi, right, out);
}

}  // namespace detail

// Interior gammas in (0, r) where the optimal cover value x*(gamma), a
// convex piecewise-linear function, changes slope.
inline std::vector<Rational> lp_breakpoints(const ComponentDecomposition& d) {
  std::vector<Rational> out;
  LpResult lo = min_fractional_cover(d, Rational(0));
  LpResult hi = min_fractional_cover(d, Rational(d.r()));
  detail::collect_breakpoints(d, Rational(0), detail::support_line(lo), Rational(d.r()), detail::support_line(hi), out);
  std::sort(out.begin(), out.end());
  return out;
}

struct ProvableBound {
  QuadIrrational z;
  Rational gamma;
  Rational x;
  LpResult lp;
  std::vector<Rational> breakpoints;
  std::size_t evaluated = 0;  // number of gamma values examined
};

// Strongest z_lower_bound(r, gamma, x*(gamma)) over the LP breakpoints, the
// endpoints, and the grid gamma = k/grid_denominator. Ties go to the smaller
// gamma. grid_denominator = 0 disables the grid.
inline ProvableBound best_provable_bound(const ComponentDecomposition& d, int grid_denominator = 100) {
  if (grid_denominator < 0) throw Error("grid denominator must be nonnegative");
  ProvableBound best;
  best.breakpoints = lp_breakpoints(d);
  std::vector<Rational> gammas{Rational(0), Rational(d.r())};
  gammas.insert(gammas.end(), best.breakpoints.begin(), best.breakpoints.end());
  for (int k = 1; grid_denominator > 0 && k < d.r() * grid_denominator; ++k)
    gammas.push_back(Rational(k, grid_denominator));
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());

  bool have = false;
  for (const Rational& g : gammas) {
    LpResult lp = min_fractional_cover(d, g);
    QuadIrrational z = z_lower_bound(BoundQuery{d.r(), g, lp.optimum});
    if (!have || z > best.z) {
      best.z = z;
      best.gamma = g;
      best.x = lp.optimum;
      best.lp = std::move(lp);
      have = true;
    }
  }
  best.evaluated = gammas.size();
  return best;
}

}  // namespace monocomp
