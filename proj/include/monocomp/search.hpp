#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "monocomp/bounds.hpp"
#include "monocomp/coloring.hpp"
#include "monocomp/components.hpp"

namespace monocomp {

// Uniform independent color per edge, reproducible from the seed.
inline EdgeColoring random_coloring(int n, int r, std::uint64_t seed) {
  if (n < 2) throw Error("random_coloring needs n >= 2");
  if (r < 1) throw Error("random_coloring needs r >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, r - 1);
  std::vector<Color> colors(static_cast<std::size_t>(choose2(n)));
  for (auto& c : colors) c = pick(rng);
  return EdgeColoring(n, r, std::move(colors));
}

enum class Symmetry { None, Vertex, VertexColor };

inline const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::Vertex: return "vertex";
    case Symmetry::VertexColor: return "vertex+color";
  }
  return "?";
}

inline Symmetry parse_symmetry(const std::string& s) {
  if (s == "none") return Symmetry::None;
  if (s == "vertex") return Symmetry::Vertex;
  if (s == "vertex+color") return Symmetry::VertexColor;
  throw Error("unknown symmetry '" + s + "' (expected none, vertex, vertex+color)");
}

struct SearchConfig {
  int n = 2;
  int r = 1;
  Symmetry symmetry = Symmetry::VertexColor;
  bool objective_cutoff = true;
  std::uint64_t budget_nodes = 500'000'000;
  int jobs = 1;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(double estimate, std::uint64_t budget)
      : Error("search refused: estimated cost " + std::to_string(static_cast<long double>(estimate)) +
              " nodes exceeds the budget of " + std::to_string(budget)),
        estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

struct SearchResult {
  std::int64_t value = 0;
  EdgeColoring witness{1, 1};
  std::uint64_t nodes = 0;   // partial colorings visited
  std::uint64_t leaves = 0;  // complete colorings reached
};

// Rough leaf count of the search: r^C(n,2) divided by the symmetry group order.
inline double estimated_search_cost(const SearchConfig& cfg) {
  double log_cost = static_cast<double>(choose2(cfg.n)) * std::log(static_cast<double>(cfg.r));
  if (cfg.symmetry != Symmetry::None) log_cost -= std::lgamma(cfg.n + 1.0);
  if (cfg.symmetry == Symmetry::VertexColor) log_cost -= std::lgamma(cfg.r + 1.0);
  return std::exp(std::max(0.0, log_cost));
}

namespace detail {

// Depth-first search over colorings with edges in colex order
// (0,1), (0,2), (1,2), (0,3), ... so that after vertex m-1 the prefix is a
// complete coloring of K_m. Per-color union-find with rollback tracks the
// largest component edge count.
class MinMaxComponentSearch {
 public:
  MinMaxComponentSearch(const SearchConfig& cfg, std::atomic<std::uint64_t>& nodes)
      : cfg_(cfg), n_(cfg.n), r_(cfg.r), nodes_(nodes) {
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u) edges_.emplace_back(u, v);
    colex_index_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = edges_[e];
      colex_index_[static_cast<std::size_t>(u * n_ + v)] = e;
      colex_index_[static_cast<std::size_t>(v * n_ + u)] = e;
    }
    const auto nodes_total = static_cast<std::size_t>(r_ * n_);
    parent_.resize(nodes_total);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(nodes_total, 1);
    edges_in_.assign(nodes_total, 0);
    colors_.assign(edges_.size(), -1);
  }

  std::size_t edge_total() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Assigns a prefix; returns false if it is not canonical or is already
  // worse than shared_best.
  bool load_prefix(const std::vector<Color>& prefix, std::int64_t shared_best) {
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      if (!admissible(prefix[e])) return false;
      push(e, prefix[e]);
      if (cfg_.objective_cutoff && current_max_ > shared_best) return false;
      if (at_boundary(e) && !canonical(e + 1)) return false;
    }
    return true;
  }

  // Enumerates all canonical prefixes of the given length.
  void prefixes(std::size_t start, std::size_t length, std::vector<std::vector<Color>>& out) {
    if (start == length) {
      out.emplace_back(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(length));
      return;
    }
    for (Color c = 0; c < r_; ++c) {
      if (!admissible(c)) continue;
      push(start, c);
      if (!at_boundary(start) || canonical(start + 1)) prefixes(start + 1, length, out);
      pop();
    }
  }

  // Minimum over completions of the current prefix, pruning at >= local best
  // and at > shared best. Returns the local best and its witness.
  void run(std::size_t start, std::atomic<std::int64_t>& shared_best) {
    shared_ = &shared_best;
    dfs(start);
  }

  std::int64_t best() const { return best_; }
  const std::vector<Color>& best_colors() const { return best_colors_; }
  std::uint64_t leaves() const { return leaves_; }

  EdgeColoring to_coloring(const std::vector<Color>& colex_colors) const {
    EdgeColoring g(n_, r_);
    for (std::size_t e = 0; e < edges_.size(); ++e) g.set_color(edges_[e].first, edges_[e].second, colex_colors[e]);
    return g;
  }

 private:
  struct Undo {
    std::size_t child;  // SIZE_MAX when no union happened
    std::size_t root;
    std::int64_t prev_edges;
    std::int64_t prev_max;
    Color prev_top_color;
  };

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool admissible(Color c) const {
    return cfg_.symmetry != Symmetry::VertexColor || c <= top_color_ + 1;
  }

  bool at_boundary(std::size_t e) const {
    // Last edge of vertex v is (v-1, v).
    return edges_[e].first + 1 == edges_[e].second;
  }

  void push(std::size_t e, Color c) {
    auto [u, v] = edges_[e];
    const auto base = static_cast<std::size_t>(c * n_);
    std::size_t a = find(base + static_cast<std::size_t>(u)), b = find(base + static_cast<std::size_t>(v));
    Undo undo{SIZE_MAX, a, edges_in_[a], current_max_, top_color_};
    if (a != b) {
      if (size_[a] < size_[b]) std::swap(a, b);
      undo = Undo{b, a, edges_in_[a], current_max_, top_color_};
      parent_[b] = a;
      size_[a] += size_[b];
      edges_in_[a] += edges_in_[b];
    }
    ++edges_in_[a];
    current_max_ = std::max(current_max_, edges_in_[a]);
    top_color_ = std::max(top_color_, c);
    colors_[e] = c;
    undo_.push_back(undo);
  }

  void pop() {
    Undo u = undo_.back();
    undo_.pop_back();
    edges_in_[u.root] = u.prev_edges;
    if (u.child != SIZE_MAX) {
      parent_[u.child] = u.child;
      size_[u.root] -= size_[u.child];
    }
    current_max_ = u.prev_max;
    top_color_ = u.prev_top_color;
    colors_[undo_.size()] = -1;
  }

  // True iff the complete coloring of K_m held in the prefix is
  // lexicographically least among its images under vertex permutations of
  // 0..m-1 (and color permutations when enabled).
  bool canonical(std::size_t prefix_len) const {
    if (cfg_.symmetry == Symmetry::None) return true;
    const int m = edges_[prefix_len - 1].second + 1;
    std::vector<int> inv(static_cast<std::size_t>(m));
    std::iota(inv.begin(), inv.end(), 0);
    std::vector<Color> relabel(static_cast<std::size_t>(r_));
    while (std::next_permutation(inv.begin(), inv.end())) {
      std::fill(relabel.begin(), relabel.end(), -1);
      Color next_label = 0;
      for (std::size_t e = 0; e < prefix_len; ++e) {
        auto [u, v] = edges_[e];
        Color c = colors_[colex_index_[static_cast<std::size_t>(inv[static_cast<std::size_t>(u)] * n_ +
                                                                inv[static_cast<std::size_t>(v)])]];
        if (cfg_.symmetry == Symmetry::VertexColor) {
          auto& l = relabel[static_cast<std::size_t>(c)];
          if (l == -1) l = next_label++;
          c = l;
        }
        if (c < colors_[e]) return false;
        if (c > colors_[e]) break;
      }
    }
    return true;
  }

  void dfs(std::size_t e) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= cfg_.budget_nodes) throw BudgetExceeded(
        static_cast<double>(nodes_.load()), cfg_.budget_nodes);
    if (e == edges_.size()) {
      ++leaves_;
      if (current_max_ < best_) {
        best_ = current_max_;
        best_colors_ = colors_;
        std::int64_t seen = shared_->load();
        while (best_ < seen && !shared_->compare_exchange_weak(seen, best_)) {
        }
      }
      return;
    }
    for (Color c = 0; c < r_; ++c) {
      if (!admissible(c)) continue;
      push(e, c);
      bool keep = !cfg_.objective_cutoff || (current_max_ < best_ && current_max_ <= shared_->load());
      if (keep && at_boundary(e) && !canonical(e + 1)) keep = false;
      if (keep) dfs(e + 1);
      pop();
    }
  }

  const SearchConfig& cfg_;
  int n_, r_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<std::int64_t>* shared_ = nullptr;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::size_t> colex_index_;
  std::vector<std::size_t> parent_, size_;
  std::vector<std::int64_t> edges_in_;
  std::vector<Color> colors_;
  std::vector<Undo> undo_;
  std::int64_t current_max_ = 0;
  Color top_color_ = -1;
  std::int64_t best_ = INT64_MAX;
  std::vector<Color> best_colors_;
  std::uint64_t leaves_ = 0;
};

}  // namespace detail

// M(n, r): the minimum over r-colorings of K_n of the largest monochromatic
// component edge count, with a witness attaining it.
inline SearchResult exact_M(const SearchConfig& cfg) {
  if (cfg.n < 2) throw Error("exact_M needs n >= 2");
  if (cfg.r < 1) throw Error("exact_M needs r >= 1");
  if (cfg.jobs < 1) throw Error("jobs must be at least 1");
  const double estimate = estimated_search_cost(cfg);
  if (estimate > static_cast<double>(cfg.budget_nodes)) throw BudgetExceeded(estimate, cfg.budget_nodes);

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::int64_t> shared{INT64_MAX};
  SearchResult result;
  std::vector<Color> best_colors;
  std::int64_t best = INT64_MAX;

  if (cfg.jobs == 1) {
    detail::MinMaxComponentSearch s(cfg, nodes);
    s.run(0, shared);
    best = s.best();
    best_colors = s.best_colors();
    result.leaves = s.leaves();
  } else {
    // Split at the complete coloring of K_m for the smallest m giving enough tasks.
    detail::MinMaxComponentSearch splitter(cfg, nodes);
    std::vector<std::vector<Color>> tasks;
    for (int m = 2; m <= cfg.n; ++m) {
      tasks.clear();
      splitter.prefixes(0, static_cast<std::size_t>(choose2(m)), tasks);
      if (tasks.size() >= static_cast<std::size_t>(4 * cfg.jobs) || m == cfg.n) break;
    }
    struct TaskResult {
      std::int64_t best = INT64_MAX;
      std::vector<Color> colors;
      std::uint64_t leaves = 0;
    };
    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        try {
          detail::MinMaxComponentSearch s(cfg, nodes);
          if (!s.load_prefix(tasks[t], shared.load())) continue;
          s.run(tasks[t].size(), shared);
          results[t] = TaskResult{s.best(), s.best_colors(), s.leaves()};
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next = tasks.size();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    for (const auto& tr : results) {
      result.leaves += tr.leaves;
      if (tr.best < best) {
        best = tr.best;
        best_colors = tr.colors;
      }
    }
  }

  if (best == INT64_MAX) throw Error("internal: search found no coloring");
  detail::MinMaxComponentSearch convert(cfg, nodes);
  result.value = best;
  result.witness = convert.to_coloring(best_colors);
  result.nodes = nodes.load();
  if (decompose(result.witness).max_edges() != result.value) throw Error("internal: witness does not attain the value");
  return result;
}

// ---------------------------------------------------------------------------
// Empirical soundness scans

struct SoundnessScanConfig {
  int exhaustive_n_max = 4;
  int exhaustive_r_max = 3;
  int random_samples = 1000;
  int random_n = 30;
  int random_r = 4;
  int random_subsets = 1000;
  std::size_t exhaustive_subset_limit = 12;  // all subsets when |C| is at most this
  bool check_lp = true;
  int lp_grid_denominator = 0;
  std::uint64_t seed = 1;
};

struct SoundnessViolation {
  EdgeColoring coloring;
  std::vector<std::size_t> subset;  // empty for LP-bound violations
  std::string what;
};

struct SoundnessReport {
  std::int64_t colorings = 0;
  std::int64_t subsets_checked = 0;
  std::int64_t lp_checks = 0;
  std::int64_t equality_cases = 0;  // max fraction equal to the LP bound
  std::int64_t violations = 0;
  std::vector<SoundnessViolation> examples;  // first few violations
};

namespace detail {

inline void scan_one(const EdgeColoring& g, const SoundnessScanConfig& cfg, bool exhaustive_subsets,
                     std::mt19937_64& rng, SoundnessReport& report) {
  const ComponentDecomposition d = decompose(g);
  const std::int64_t max_edges = d.max_edges();
  ++report.colorings;
  auto record = [&](std::vector<std::size_t> subset, std::string what) {
    ++report.violations;
    if (report.examples.size() < 8) report.examples.push_back(SoundnessViolation{g, std::move(subset), std::move(what)});
  };
  auto check_subset = [&](auto&& included) {
    std::int64_t x = 0, vertex_total = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (included(i)) {
        ++x;
        vertex_total += static_cast<std::int64_t>(d.component(i).size());
      }
    ++report.subsets_checked;
    if (!main_inequality_holds(g.n(), g.r(), vertex_total, x, max_edges)) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < d.size(); ++i)
        if (included(i)) subset.push_back(i);
      record(std::move(subset), "main inequality fails");
    }
  };
  if (exhaustive_subsets && d.size() <= cfg.exhaustive_subset_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask)
      check_subset([&](std::size_t i) { return ((mask >> i) & 1u) != 0; });
  } else {
    std::bernoulli_distribution coin(0.5);
    std::vector<char> pick(d.size());
    check_subset([](std::size_t) { return false; });
    check_subset([](std::size_t) { return true; });
    for (int s = 0; s < cfg.random_subsets; ++s) {
      for (auto& p : pick) p = coin(rng) ? 1 : 0;
      check_subset([&](std::size_t i) { return pick[i] != 0; });
    }
  }
  if (cfg.check_lp && g.n() >= 2) {
    ++report.lp_checks;
    ProvableBound bound = best_provable_bound(d, cfg.lp_grid_denominator);
    QuadIrrational actual(max_edge_fraction(d));
    if (actual < bound.z) record({}, "max edge fraction below the LP bound " + bound.z.to_string());
    if (actual == bound.z) ++report.equality_cases;
  }
}

}  // namespace detail

// Checks z(r-gamma)^2 >= max(1-xz,0)^2 for component subsets of every
// coloring with n <= exhaustive_n_max, r <= exhaustive_r_max, then for
// random colorings; optionally also compares the true maximum edge fraction
// with the LP-certified bound.
inline SoundnessReport scan_bound_soundness(const SoundnessScanConfig& cfg) {
  SoundnessReport report;
  std::mt19937_64 rng(cfg.seed);
  for (int n = 2; n <= cfg.exhaustive_n_max; ++n)
    for (int r = 1; r <= cfg.exhaustive_r_max; ++r) {
      const auto e = static_cast<std::size_t>(choose2(n));
      std::vector<Color> colors(e, 0);
      for (;;) {
        detail::scan_one(EdgeColoring(n, r, colors), cfg, true, rng, report);
        std::size_t i = 0;
        while (i < e && colors[i] == r - 1) colors[i++] = 0;
        if (i == e) break;
        ++colors[i];
      }
    }
  for (int s = 0; s < cfg.random_samples; ++s)
    detail::scan_one(random_coloring(cfg.random_n, cfg.random_r, rng()), cfg, false, rng, report);
  return report;
}

// Same checks on one given coloring (all subsets when small enough).
inline SoundnessReport scan_coloring(const EdgeColoring& g, const SoundnessScanConfig& cfg) {
  SoundnessReport report;
  std::mt19937_64 rng(cfg.seed);
  detail::scan_one(g, cfg, true, rng, report);
  return report;
}

}  // namespace monocomp
