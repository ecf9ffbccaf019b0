#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monocomp/rational.hpp"

namespace monocomp {

using Vertex = int;
using Color = int;

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

constexpr std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

// An r-coloring of the edges of K_n. Every unordered pair {u, v} carries
// exactly one color in [0, r); unused colors are allowed.
class EdgeColoring {
 public:
  EdgeColoring(int n, int r) : n_(n), r_(r), colors_(static_cast<std::size_t>(choose2(n)), 0) {
    if (n < 1) throw Error("vertex count must be positive");
    if (r < 1) throw Error("color count must be positive");
  }

  EdgeColoring(int n, int r, std::vector<Color> colors) : EdgeColoring(n, r) {
    if (colors.size() != colors_.size()) throw Error("edge color vector has the wrong length");
    for (Color c : colors)
      if (c < 0 || c >= r) throw Error("edge color out of range");
    colors_ = std::move(colors);
  }

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t edge_count() const { return colors_.size(); }

  // Position of {u, v} in lexicographic order of pairs (u < v).
  std::size_t edge_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    check_pair(u, v);
    auto uu = static_cast<std::size_t>(u), nn = static_cast<std::size_t>(n_);
    return uu * nn - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
  }

  Color color(Vertex u, Vertex v) const { return colors_[edge_index(u, v)]; }

  void set_color(Vertex u, Vertex v, Color c) {
    if (c < 0 || c >= r_) throw Error("edge color out of range");
    colors_[edge_index(u, v)] = c;
  }

  // Colors in lexicographic edge order.
  const std::vector<Color>& colors() const { return colors_; }

  // Calls fn(u, v, c) for every edge in lexicographic order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    std::size_t e = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) fn(u, v, colors_[e++]);
  }

  // Applies a vertex relabeling (perm[old] = new) and a color relabeling.
  EdgeColoring relabeled(const std::vector<Vertex>& vertex_perm, const std::vector<Color>& color_perm) const {
    EdgeColoring out(n_, r_);
    for_each_edge([&](Vertex u, Vertex v, Color c) {
      out.set_color(vertex_perm[static_cast<std::size_t>(u)], vertex_perm[static_cast<std::size_t>(v)],
                    color_perm[static_cast<std::size_t>(c)]);
    });
    return out;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u == v) throw Error("an edge needs two distinct vertices");
    if (u < 0 || v >= n_) throw Error("vertex index out of range");
  }

  int n_;
  int r_;
  std::vector<Color> colors_;
};

// Text format: "n r" then one "u v c" line per pair, u < v, in lexicographic
// order, LF line endings.
inline void write_coloring(std::ostream& os, const EdgeColoring& g) {
  os << g.n() << ' ' << g.r() << '\n';
  g.for_each_edge([&](Vertex u, Vertex v, Color c) { os << u << ' ' << v << ' ' << c << '\n'; });
}

inline std::string to_text(const EdgeColoring& g) {
  std::ostringstream os;
  write_coloring(os, g);
  return os.str();
}

namespace detail {

// Splits a line into nonnegative decimal fields separated by single spaces.
inline bool split_fields(const std::string& line, std::vector<std::int64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t j = i;
    std::int64_t v = 0;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9') {
      if (v > (std::int64_t{1} << 40)) return false;
      v = v * 10 + (line[j] - '0');
      ++j;
    }
    if (j == i) return false;
    out.push_back(v);
    if (j == line.size()) break;
    if (line[j] != ' ' || j + 1 == line.size()) return false;
    i = j + 1;
  }
  return true;
}

}  // namespace detail

inline EdgeColoring read_coloring(std::istream& is) {
  std::string line;
  std::vector<std::int64_t> f;
  std::size_t lineno = 0;
  auto next = [&](const char* expected) {
    if (!std::getline(is, line)) throw ParseError(lineno + 1, std::string("unexpected end of input, expected ") + expected);
    ++lineno;
    if (!line.empty() && line.back() == '\r') throw ParseError(lineno, "CR line ending");
    if (!detail::split_fields(line, f)) throw ParseError(lineno, "malformed line '" + line + "'");
  };
  next("header 'n r'");
  if (f.size() != 2) throw ParseError(lineno, "header must be 'n r'");
  if (f[0] < 1 || f[0] > 100000) throw ParseError(lineno, "vertex count out of range");
  if (f[1] < 1 || f[1] > 1000000) throw ParseError(lineno, "color count out of range");
  int n = static_cast<int>(f[0]), r = static_cast<int>(f[1]);
  EdgeColoring g(n, r);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      next("an edge line");
      if (f.size() != 3) throw ParseError(lineno, "edge line must be 'u v c'");
      if (f[0] != u || f[1] != v) {
        std::string got = std::to_string(f[0]) + " " + std::to_string(f[1]);
        std::string want = std::to_string(u) + " " + std::to_string(v);
        bool earlier = f[0] < u || (f[0] == u && f[1] < v);
        throw ParseError(lineno, (earlier ? "duplicate or out-of-order pair " : "missing pair ") + want +
                                     " (found " + got + ")");
      }
      if (f[2] >= r) throw ParseError(lineno, "color " + std::to_string(f[2]) + " out of range [0, " + std::to_string(r) + ")");
      g.set_color(u, v, static_cast<Color>(f[2]));
    }
  }
  while (std::getline(is, line)) {
    ++lineno;
    throw ParseError(lineno, "trailing content after the last pair");
  }
  return g;
}

inline EdgeColoring parse_coloring(const std::string& text) {
  std::istringstream is(text);
  return read_coloring(is);
}

}  // namespace monocomp
