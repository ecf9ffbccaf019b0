#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "monocomp/coloring.hpp"
#include "monocomp/finite_field.hpp"

namespace monocomp {

// Affine plane AG(2, q). Point (x, y) has label x*q + y. Class m < q holds
// the lines y = m*x + b (b = 0..q-1); class q holds the verticals x = c.
struct AffinePlane {
  int q = 0;
  // parallel_classes[i][j] is the sorted point list of line j in class i.
  std::vector<std::vector<std::vector<int>>> parallel_classes;

  int point_count() const { return q * q; }
};

inline AffinePlane affine_plane(int q) {
  FiniteField f = make_field(q);
  AffinePlane plane;
  plane.q = q;
  plane.parallel_classes.assign(static_cast<std::size_t>(q + 1),
                                std::vector<std::vector<int>>(static_cast<std::size_t>(q)));
  for (int m = 0; m < q; ++m)
    for (int x = 0; x < q; ++x)
      for (int b = 0; b < q; ++b) {
        int y = f.add(f.mul(m, x), b);
        plane.parallel_classes[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)].push_back(x * q + y);
      }
  for (int c = 0; c < q; ++c)
    for (int y = 0; y < q; ++y)
      plane.parallel_classes[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)].push_back(c * q + y);
  for (auto& cls : plane.parallel_classes)
    for (auto& line : cls) std::sort(line.begin(), line.end());
  return plane;
}

// Colors K_{(r-1)^2} by giving the lines of the i-th parallel class of
// AG(2, r-1) color i.
inline EdgeColoring gyarfas_coloring(int r) {
  if (r < 3 || !field_order_supported(r - 1))
    throw Error("gyarfas coloring needs r-1 to be a supported prime power (got r = " + std::to_string(r) + ")");
  AffinePlane plane = affine_plane(r - 1);
  EdgeColoring g(plane.point_count(), r);
  for (std::size_t i = 0; i < plane.parallel_classes.size(); ++i)
    for (const auto& line : plane.parallel_classes[i])
      for (std::size_t a = 0; a < line.size(); ++a)
        for (std::size_t b = a + 1; b < line.size(); ++b) g.set_color(line[a], line[b], static_cast<Color>(i));
  return g;
}

// Replaces every base vertex b by the blob [b*k, (b+1)*k). Edges between
// blobs inherit the base color; edges inside blob b are taken in
// lexicographic order and colored (b + t) mod r for the t-th edge.
inline EdgeColoring blow_up(const EdgeColoring& base, int k) {
  if (k < 1) throw Error("blob size must be at least 1");
  const int n = base.n() * k, r = base.r();
  EdgeColoring g(n, r);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / k != v / k) g.set_color(u, v, base.color(u / k, v / k));
  for (int b = 0; b < base.n(); ++b) {
    int t = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j, ++t) g.set_color(b * k + i, b * k + j, (b + t) % r);
  }
  return g;
}

inline constexpr Color kRed = 0;
inline constexpr Color kBlue = 1;

// Red cliques on [0, (2n+1)/3) and [(2n+1)/3, n), blue between them.
inline EdgeColoring two_color_extremal(int n) {
  if (n < 4 || n % 3 != 1)
    throw Error("two_color_extremal needs n >= 4 with n = 1 (mod 3) (got n = " + std::to_string(n) + ")");
  const int big = (2 * n + 1) / 3;
  EdgeColoring g(n, 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_color(u, v, (u < big) == (v < big) ? kRed : kBlue);
  return g;
}

}  // namespace monocomp
