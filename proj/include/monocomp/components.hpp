#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "monocomp/coloring.hpp"
#include "monocomp/rational.hpp"

namespace monocomp {

// Disjoint-set forest with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the surviving root.
  std::size_t unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return a;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// A connected component of one color class, isolated vertices included.
struct Component {
  Color color = 0;
  std::vector<Vertex> vertices;  // sorted ascending
  std::int64_t edge_count = 0;

  std::size_t size() const { return vertices.size(); }
  bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
  friend bool operator==(const Component&, const Component&) = default;
};

// All monochromatic components of a coloring. Components are ordered by
// color, then by smallest vertex.
class ComponentDecomposition {
 public:
  ComponentDecomposition(int n, int r, std::vector<Component> components)
      : n_(n), r_(r), components_(std::move(components)),
        by_color_(static_cast<std::size_t>(r)),
        membership_(static_cast<std::size_t>(r), std::vector<std::size_t>(static_cast<std::size_t>(n))) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const Component& c = components_[i];
      by_color_[static_cast<std::size_t>(c.color)].push_back(i);
      for (Vertex v : c.vertices) membership_[static_cast<std::size_t>(c.color)][static_cast<std::size_t>(v)] = i;
    }
  }

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(std::size_t i) const { return components_[i]; }
  std::size_t size() const { return components_.size(); }

  // Indices (into components()) of the components of color c.
  const std::vector<std::size_t>& of_color(Color c) const { return by_color_[static_cast<std::size_t>(c)]; }

  // Index of the color-c component containing v.
  std::size_t component_of(Color c, Vertex v) const {
    return membership_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
  }

  std::int64_t max_edges() const {
    std::int64_t best = 0;
    for (const Component& c : components_) best = std::max(best, c.edge_count);
    return best;
  }

 private:
  int n_;
  int r_;
  std::vector<Component> components_;
  std::vector<std::vector<std::size_t>> by_color_;
  std::vector<std::vector<std::size_t>> membership_;
};

inline ComponentDecomposition decompose(const EdgeColoring& g) {
  const auto n = static_cast<std::size_t>(g.n());
  const auto r = static_cast<std::size_t>(g.r());
  // One forest over r*n nodes: node c*n + v is vertex v in color c.
  DisjointSets sets(r * n);
  g.for_each_edge([&](Vertex u, Vertex v, Color c) {
    auto base = static_cast<std::size_t>(c) * n;
    sets.unite(base + static_cast<std::size_t>(u), base + static_cast<std::size_t>(v));
  });

  std::vector<Component> components;
  std::vector<std::size_t> slot(r * n, SIZE_MAX);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t root = sets.find(c * n + v);
      if (slot[root] == SIZE_MAX) {
        slot[root] = components.size();
        components.push_back(Component{static_cast<Color>(c), {}, 0});
      }
      components[slot[root]].vertices.push_back(static_cast<Vertex>(v));
    }
  }
  g.for_each_edge([&](Vertex u, Vertex, Color c) {
    ++components[slot[sets.find(static_cast<std::size_t>(c) * n + static_cast<std::size_t>(u))]].edge_count;
  });
  return ComponentDecomposition(g.n(), g.r(), std::move(components));
}

// max_C |E(C)| / C(n, 2), exactly.
inline Rational max_edge_fraction(const ComponentDecomposition& d) {
  if (d.n() < 2) throw Error("max_edge_fraction needs at least two vertices");
  return Rational(Integer(d.max_edges()), Integer(choose2(d.n())));
}

// Number of colors in which u and v lie in a common component.
inline int shared_components(const ComponentDecomposition& d, Vertex u, Vertex v) {
  if (u == v) throw Error("shared_components needs two distinct vertices");
  if (u < 0 || v < 0 || u >= d.n() || v >= d.n()) throw Error("vertex index out of range");
  int shared = 0;
  for (Color c = 0; c < d.r(); ++c)
    if (d.component_of(c, u) == d.component_of(c, v)) ++shared;
  return shared;
}

// Classes of vertices that share a component in every color, ordered by
// smallest member.
inline std::vector<std::vector<Vertex>> equivalence_classes(const ComponentDecomposition& d) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> key(static_cast<std::size_t>(d.r()));
  for (Vertex v = 0; v < d.n(); ++v) {
    for (Color c = 0; c < d.r(); ++c) key[static_cast<std::size_t>(c)] = d.component_of(c, v);
    auto [it, inserted] = index.try_emplace(key, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

// Pairs (u < v) sharing components in exactly two colors.
inline std::vector<std::pair<Vertex, Vertex>> biconnected_pairs(const ComponentDecomposition& d) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < d.n(); ++u)
    for (Vertex v = u + 1; v < d.n(); ++v)
      if (shared_components(d, u, v) == 2) out.emplace_back(u, v);
  return out;
}

}  // namespace monocomp
