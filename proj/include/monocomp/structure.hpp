#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "monocomp/components.hpp"
#include "monocomp/rational.hpp"

namespace monocomp {

// ---------------------------------------------------------------------------
// 2-colorings of complete bipartite graphs

// A component of one color inside the bipartite graph between A1 and A2,
// together with the weight the certificate puts on it.
struct WeightedPart {
  Color color = 0;
  std::vector<Vertex> vertices;  // sorted
  Rational weight;
};

struct BipartiteCase {
  enum class Kind {
    A1,  // one color (the designated one) has a single spanning component
    A2,  // the other color has a single spanning component
    B,   // each color has two components, each meeting both sides
    C,   // one component per color; their intersection holds a side, their union both
  };
  enum class Direction { None, TowardA1, TowardA2 };

  Kind kind = Kind::A1;
  Color color = 0;  // spanning color for A1/A2
  Direction direction = Direction::None;
  std::vector<WeightedPart> certificate;
};

inline const char* to_string(BipartiteCase::Kind k) {
  switch (k) {
    case BipartiteCase::Kind::A1: return "a1";
    case BipartiteCase::Kind::A2: return "a2";
    case BipartiteCase::Kind::B: return "b";
    case BipartiteCase::Kind::C: return "c";
  }
  return "?";
}

inline const char* to_string(BipartiteCase::Direction d) {
  switch (d) {
    case BipartiteCase::Direction::None: return "none";
    case BipartiteCase::Direction::TowardA1: return "toward-A1";
    case BipartiteCase::Direction::TowardA2: return "toward-A2";
  }
  return "?";
}

namespace detail {

inline bool contains_all(const std::vector<Vertex>& sorted_hay, const std::vector<Vertex>& needles) {
  for (Vertex v : needles)
    if (!std::binary_search(sorted_hay.begin(), sorted_hay.end(), v)) return false;
  return true;
}

inline bool intersects(const std::vector<Vertex>& sorted_a, const std::vector<Vertex>& b) {
  for (Vertex v : b)
    if (std::binary_search(sorted_a.begin(), sorted_a.end(), v)) return true;
  return false;
}

}  // namespace detail

// Certificate check: weights in {1/2, 1}, total at most 2, every vertex of
// A1 and A2 covered with weight at least 1, parts inside A1 and A2.
inline bool validate_bipartite_certificate(const std::vector<Vertex>& a1, const std::vector<Vertex>& a2,
                                           const BipartiteCase& bc) {
  std::map<Vertex, Rational> cover;
  for (Vertex v : a1) cover[v] = 0;
  for (Vertex v : a2) cover[v] = 0;
  Rational total = 0;
  for (const auto& part : bc.certificate) {
    if (part.weight != Rational(1, 2) && part.weight != 1) return false;
    total += part.weight;
    for (Vertex v : part.vertices) {
      auto it = cover.find(v);
      if (it == cover.end()) return false;
      it->second += part.weight;
    }
  }
  if (total > 2) return false;
  for (const auto& [v, w] : cover)
    if (w < 1) return false;
  return true;
}

// Classifies the coloring of the complete bipartite graph between A1 and A2
// (edges inside A1 or A2 are ignored). Precedence a > b > c; within (a) the
// designated color comes first, within (c) the direction toward A1.
// Returns nullopt when no case applies.
inline std::optional<BipartiteCase> classify_bipartite(const EdgeColoring& g, std::vector<Vertex> a1,
                                                       std::vector<Vertex> a2, std::pair<Color, Color> colors,
                                                       std::optional<Color> designated = std::nullopt) {
  if (a1.empty() || a2.empty()) throw Error("bipartite sides must be non-empty");
  if (colors.first == colors.second) throw Error("bipartite classification needs two distinct colors");
  for (Color c : {colors.first, colors.second})
    if (c < 0 || c >= g.r()) throw Error("color out of range");
  std::sort(a1.begin(), a1.end());
  std::sort(a2.begin(), a2.end());
  std::vector<Vertex> all;
  std::set_union(a1.begin(), a1.end(), a2.begin(), a2.end(), std::back_inserter(all));
  if (all.size() != a1.size() + a2.size()) throw Error("bipartite sides must be disjoint and duplicate-free");
  for (Vertex v : all)
    if (v < 0 || v >= g.n()) throw Error("vertex index out of range");
  const Color blue = designated.value_or(colors.second);

  auto local = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), v) - all.begin()); };
  std::array<DisjointSets, 2> sets{DisjointSets(all.size()), DisjointSets(all.size())};
  for (Vertex u : a1)
    for (Vertex v : a2) {
      Color c = g.color(u, v);
      if (c != colors.first && c != colors.second)
        throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " has color " + std::to_string(c) +
                    ", outside the given pair");
      sets[c == colors.first ? 0 : 1].unite(local(u), local(v));
    }

  std::array<std::vector<WeightedPart>, 2> parts;
  for (std::size_t side = 0; side < 2; ++side) {
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto [it, fresh] = slot.try_emplace(sets[side].find(i), parts[side].size());
      if (fresh) parts[side].push_back(WeightedPart{side == 0 ? colors.first : colors.second, {}, Rational(0)});
      parts[side][it->second].vertices.push_back(all[i]);
    }
  }

  BipartiteCase out;
  // (a)
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t side = 0; side < 2; ++side) {
      if (parts[side].size() != 1) continue;
      bool is_blue = parts[side][0].color == blue;
      if ((pass == 0) != is_blue) continue;
      out.kind = is_blue ? BipartiteCase::Kind::A1 : BipartiteCase::Kind::A2;
      out.color = parts[side][0].color;
      WeightedPart p = parts[side][0];
      p.weight = 1;
      out.certificate = {p};
      return out;
    }
  // (b)
  bool case_b = parts[0].size() == 2 && parts[1].size() == 2;
  for (std::size_t side = 0; case_b && side < 2; ++side)
    for (const auto& p : parts[side])
      if (!detail::intersects(p.vertices, a1) || !detail::intersects(p.vertices, a2)) case_b = false;
  if (case_b) {
    out.kind = BipartiteCase::Kind::B;
    for (std::size_t side = 0; side < 2; ++side)
      for (auto p : parts[side]) {
        p.weight = Rational(1, 2);
        out.certificate.push_back(std::move(p));
      }
    return out;
  }
  // (c)
  for (auto dir : {BipartiteCase::Direction::TowardA1, BipartiteCase::Direction::TowardA2}) {
    const auto& inner = dir == BipartiteCase::Direction::TowardA1 ? a1 : a2;
    for (const auto& p : parts[0]) {
      if (!detail::contains_all(p.vertices, inner)) continue;
      for (const auto& q : parts[1]) {
        if (!detail::contains_all(q.vertices, inner)) continue;
        std::vector<Vertex> both;
        std::set_union(p.vertices.begin(), p.vertices.end(), q.vertices.begin(), q.vertices.end(),
                       std::back_inserter(both));
        if (both.size() != all.size()) continue;
        out.kind = BipartiteCase::Kind::C;
        out.direction = dir;
        out.certificate = {p, q};
        for (auto& part : out.certificate) part.weight = 1;
        return out;
      }
    }
  }
  return std::nullopt;
}

struct BipartiteLemmaReport {
  std::map<std::string, std::int64_t> case_counts;  // keyed by "a1", "a2", "b", "c"
  std::int64_t colorings = 0;
  std::int64_t failures = 0;
  // (a, b, mask) of the first few colorings that fell outside every case or
  // whose certificate did not validate; bit a_i*b + b_j of mask set means color 1.
  std::vector<std::array<std::int64_t, 3>> counterexamples;
};

// Classifies every 2-coloring of K_{a,b} for 1 <= a <= a_max, 1 <= b <= b_max.
inline BipartiteLemmaReport verify_bipartite_lemma(int a_max, int b_max) {
  if (a_max < 1 || b_max < 1 || a_max > 5 || b_max > 5) throw Error("verify_bipartite_lemma supports 1..5 per side");
  BipartiteLemmaReport report;
  for (const char* k : {"a1", "a2", "b", "c"}) report.case_counts[k] = 0;
  for (int a = 1; a <= a_max; ++a)
    for (int b = 1; b <= b_max; ++b) {
      std::vector<Vertex> side1(static_cast<std::size_t>(a)), side2(static_cast<std::size_t>(b));
      std::iota(side1.begin(), side1.end(), 0);
      std::iota(side2.begin(), side2.end(), a);
      const std::int64_t total = std::int64_t{1} << (a * b);
      for (std::int64_t mask = 0; mask < total; ++mask) {
        EdgeColoring g(a + b, 2);
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < b; ++j) g.set_color(i, a + j, static_cast<Color>((mask >> (i * b + j)) & 1));
        ++report.colorings;
        auto bc = classify_bipartite(g, side1, side2, {0, 1});
        if (!bc || !validate_bipartite_certificate(side1, side2, *bc)) {
          ++report.failures;
          if (report.counterexamples.size() < 16) report.counterexamples.push_back({a, b, mask});
          continue;
        }
        ++report.case_counts[to_string(bc->kind)];
      }
    }
  return report;
}

// ---------------------------------------------------------------------------
// Covers, disjoint pairs and the r = 3 case split

namespace detail {

inline std::vector<boost::dynamic_bitset<>> vertex_masks(const ComponentDecomposition& d) {
  std::vector<boost::dynamic_bitset<>> masks;
  masks.reserve(d.size());
  for (const auto& c : d.components()) {
    boost::dynamic_bitset<> m(static_cast<std::size_t>(d.n()));
    for (Vertex v : c.vertices) m.set(static_cast<std::size_t>(v));
    masks.push_back(std::move(m));
  }
  return masks;
}

}  // namespace detail

// At most m components of pairwise distinct colors whose union is V, fewest
// components first and lexicographically least indices among those.
inline std::optional<std::vector<std::size_t>> find_spanning_cover(const ComponentDecomposition& d, int m) {
  if (m < 1) throw Error("cover size must be at least 1");
  const auto masks = detail::vertex_masks(d);
  std::size_t largest = 0;
  for (const auto& c : d.components()) largest = std::max(largest, c.size());
  const auto n = static_cast<std::size_t>(d.n());

  std::vector<std::size_t> chosen;
  std::vector<bool> color_used(static_cast<std::size_t>(d.r()), false);
  std::function<bool(std::size_t, std::size_t, const boost::dynamic_bitset<>&)> extend =
      [&](std::size_t start, std::size_t slots, const boost::dynamic_bitset<>& covered) -> bool {
    if (covered.count() == n) return true;
    if (slots == 0 || (n - covered.count()) > slots * largest) return false;
    for (std::size_t i = start; i < d.size(); ++i) {
      auto color = static_cast<std::size_t>(d.component(i).color);
      if (color_used[color]) continue;
      color_used[color] = true;
      chosen.push_back(i);
      if (extend(i + 1, slots - 1, covered | masks[i])) return true;
      chosen.pop_back();
      color_used[color] = false;
    }
    return false;
  };
  for (int size = 1; size <= std::min(m, d.r()); ++size) {
    chosen.clear();
    std::fill(color_used.begin(), color_used.end(), false);
    if (extend(0, static_cast<std::size_t>(size), boost::dynamic_bitset<>(n))) return chosen;
  }
  return std::nullopt;
}

// Lexicographically least pair (i < j) of vertex-disjoint components of
// different colors.
inline std::optional<std::pair<std::size_t, std::size_t>> detect_disjoint_pair(const ComponentDecomposition& d) {
  const auto masks = detail::vertex_masks(d);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.component(i).color != d.component(j).color && !masks[i].intersects(masks[j])) return std::make_pair(i, j);
  return std::nullopt;
}

struct R3Classification {
  enum class Case { A, B, C, Unclassified };
  Case tag = Case::Unclassified;
  std::optional<Color> single_component_color;     // case (a)
  std::optional<std::array<std::size_t, 3>> witness;  // case (c): one component per color
};

inline const char* to_string(R3Classification::Case c) {
  switch (c) {
    case R3Classification::Case::A: return "a";
    case R3Classification::Case::B: return "b";
    case R3Classification::Case::C: return "c";
    case R3Classification::Case::Unclassified: return "unclassified";
  }
  return "?";
}

// (a) some color has one component; (b) every color has two; (c) a
// component of each color such that every vertex lies in at least two.
inline R3Classification classify_r3(const ComponentDecomposition& d) {
  if (d.r() != 3) throw Error("classify_r3 needs r = 3 (got r = " + std::to_string(d.r()) + ")");
  R3Classification out;
  for (Color c = 0; c < 3; ++c)
    if (d.of_color(c).size() == 1) {
      out.tag = R3Classification::Case::A;
      out.single_component_color = c;
      return out;
    }
  if (d.of_color(0).size() == 2 && d.of_color(1).size() == 2 && d.of_color(2).size() == 2) {
    out.tag = R3Classification::Case::B;
    return out;
  }
  const auto masks = detail::vertex_masks(d);
  for (std::size_t i : d.of_color(0))
    for (std::size_t j : d.of_color(1))
      for (std::size_t k : d.of_color(2)) {
        // Covered twice: pairwise intersections union to V.
        auto twice = (masks[i] & masks[j]) | (masks[j] & masks[k]) | (masks[i] & masks[k]);
        if (twice.count() == static_cast<std::size_t>(d.n())) {
          out.tag = R3Classification::Case::C;
          out.witness = std::array<std::size_t, 3>{i, j, k};
          return out;
        }
      }
  return out;
}

// ---------------------------------------------------------------------------
// The 3x3 grid of the extremal 4-coloring

struct GridStructure {
  Color row_color = 0;
  Color column_color = 1;
  std::array<std::size_t, 3> rows{};     // component indices of the row color
  std::array<std::size_t, 3> columns{};  // component indices of the column color
  std::array<std::array<std::vector<Vertex>, 3>, 3> cells;  // cells[i][j] = rows[i] intersect columns[j]
  // The six components of the other two colors; transversal_columns[t][i] is
  // the column of the cell that transversal t occupies in row i.
  std::vector<std::size_t> transversals;
  std::vector<std::array<int, 3>> transversal_columns;
};

namespace detail {

using CellMask = std::uint16_t;

inline std::optional<GridStructure> try_grid(const ComponentDecomposition& d, Color rc, Color cc) {
  GridStructure grid;
  grid.row_color = rc;
  grid.column_color = cc;
  for (std::size_t i = 0; i < 3; ++i) {
    grid.rows[i] = d.of_color(rc)[i];
    grid.columns[i] = d.of_color(cc)[i];
  }
  std::vector<int> cell_of(static_cast<std::size_t>(d.n()));
  for (Vertex v = 0; v < d.n(); ++v) {
    auto i = static_cast<std::size_t>(std::find(grid.rows.begin(), grid.rows.end(), d.component_of(rc, v)) - grid.rows.begin());
    auto j = static_cast<std::size_t>(std::find(grid.columns.begin(), grid.columns.end(), d.component_of(cc, v)) - grid.columns.begin());
    grid.cells[i][j].push_back(v);
    cell_of[static_cast<std::size_t>(v)] = static_cast<int>(3 * i + j);
  }
  for (const auto& row : grid.cells)
    for (const auto& cell : row)
      if (cell.empty()) return std::nullopt;

  // Every component must be a union of whole cells.
  std::vector<CellMask> mask(d.size(), 0);
  for (std::size_t k = 0; k < d.size(); ++k) {
    const Component& comp = d.component(k);
    std::size_t covered = 0;
    for (Vertex v : comp.vertices) mask[k] |= static_cast<CellMask>(1u << cell_of[static_cast<std::size_t>(v)]);
    for (int c = 0; c < 9; ++c)
      if (mask[k] & (1u << c)) covered += grid.cells[static_cast<std::size_t>(c / 3)][static_cast<std::size_t>(c % 3)].size();
    if (covered != comp.size()) return std::nullopt;
  }
  for (std::size_t k = 0; k < d.size(); ++k) {
    Color c = d.component(k).color;
    if (c == rc || c == cc) continue;
    if (std::popcount(static_cast<unsigned>(mask[k])) != 3) return std::nullopt;
    std::array<int, 3> cols{-1, -1, -1};
    unsigned used_cols = 0;
    for (int cell = 0; cell < 9; ++cell)
      if (mask[k] & (1u << cell)) {
        auto row = static_cast<std::size_t>(cell / 3);
        if (cols[row] != -1) return std::nullopt;
        cols[row] = cell % 3;
        used_cols |= 1u << (cell % 3);
      }
    if (used_cols != 7u) return std::nullopt;
    grid.transversals.push_back(k);
    grid.transversal_columns.push_back(cols);
  }
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b)
      if (d.component(a).color != d.component(b).color &&
          std::popcount(static_cast<unsigned>(mask[a] & mask[b])) != 1)
        return std::nullopt;
  return grid;
}

}  // namespace detail

// Searches all ordered (row, column) color pairs for a grid structure.
inline std::optional<GridStructure> detect_gyarfas_grid(const ComponentDecomposition& d) {
  if (d.r() != 4) throw Error("detect_gyarfas_grid needs r = 4 (got r = " + std::to_string(d.r()) + ")");
  for (Color c = 0; c < 4; ++c)
    if (d.of_color(c).size() != 3) return std::nullopt;
  for (Color rc = 0; rc < 4; ++rc)
    for (Color cc = 0; cc < 4; ++cc)
      if (rc != cc)
        if (auto grid = detail::try_grid(d, rc, cc)) return grid;
  return std::nullopt;
}

}  // namespace monocomp
