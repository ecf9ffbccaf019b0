#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "monocomp/monocomp.hpp"

namespace monocomp::cli {

enum ExitCode : int { kOk = 0, kNotFound = 1, kUsage = 2, kBudget = 3 };

// Key/value report. The body is deterministic for identical input; only the
// trailing elapsed-ms line varies between runs.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  void digest(const std::string& content) { digest_ = sha256_hex(content); }
  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void add(const std::string& key, std::int64_t value) { add(key, std::to_string(value)); }
  void add_exact(const std::string& key, const Rational& v) {
    add(key, to_string(v));
    add(key + "-decimal", to_decimal(v));
  }
  void add_exact(const std::string& key, const QuadIrrational& v) {
    add(key, v.to_string());
    add(key + "-decimal", to_decimal(v));
  }

  std::string body() const {
    std::ostringstream os;
    os << "command: " << command_ << '\n';
    if (!digest_.empty()) os << "input-digest: sha256:" << digest_ << '\n';
    for (const auto& [k, v] : lines_) os << k << ": " << v << '\n';
    return os.str();
  }

  void write(std::ostream& os) const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    os << body() << "elapsed-ms: " << ms << '\n';
  }

  static std::string sha256_hex(const std::string& content) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(content.data(), content.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
  }

 private:
  std::string command_;
  std::string digest_;
  std::vector<std::pair<std::string, std::string>> lines_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

// "0,2,5-7" -> {0, 2, 5, 6, 7}
inline std::vector<Vertex> parse_vertex_list(const std::string& list_text) {
  std::vector<Vertex> out;
  std::stringstream ss(list_text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error("malformed vertex list '" + list_text + "'");
    return std::stoi(s);
  };
  while (std::getline(ss, item, ',')) {
    if (auto dash = item.find('-'); dash != std::string::npos) {
      int lo = to_int(item.substr(0, dash)), hi = to_int(item.substr(dash + 1));
      if (lo > hi) throw Error("malformed vertex range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(to_int(item));
    }
  }
  if (out.empty()) throw Error("empty vertex list");
  return out;
}

// Lines "component_index p/q"; unlisted components get weight 0.
inline Weighting parse_weights(const std::string& text, const ComponentDecomposition& d) {
  Weighting w = Weighting::uniform(d, Rational(0));
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<bool> seen(d.size(), false);
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string index_text, weight_text, extra;
    if (!(ls >> index_text >> weight_text) || (ls >> extra))
      throw ParseError(lineno, "weights line must be 'component_index p/q'");
    if (index_text.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lineno, "malformed component index '" + index_text + "'");
    std::size_t index = std::stoul(index_text);
    if (index >= d.size()) throw ParseError(lineno, "component index " + index_text + " out of range");
    if (seen[index]) throw ParseError(lineno, "component " + index_text + " listed twice");
    seen[index] = true;
    try {
      w.weights[index] = parse_rational(weight_text);
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return w;
}

inline std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

inline std::string join_indices(const std::vector<std::size_t>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

inline void report_components(Report& rep, const ComponentDecomposition& d) {
  rep.add("n", d.n());
  rep.add("r", d.r());
  rep.add("components", static_cast<std::int64_t>(d.size()));
  for (Color c = 0; c < d.r(); ++c)
    rep.add("components-color-" + std::to_string(c), static_cast<std::int64_t>(d.of_color(c).size()));
  rep.add("max-edges", d.max_edges());
  if (d.n() >= 2) rep.add_exact("max-edge-fraction", max_edge_fraction(d));
}

inline std::string components_csv(const ComponentDecomposition& d) {
  std::ostringstream os;
  os << "index,color,vertex_count,edge_count,edge_fraction,vertices\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Component& c = d.component(i);
    os << i << ',' << c.color << ',' << c.size() << ',' << c.edge_count << ','
       << (d.n() >= 2 ? to_string(Rational(Integer(c.edge_count), Integer(choose2(d.n())))) : "0") << ",\""
       << join(c.vertices) << "\"\n";
  }
  return os.str();
}

struct LoadedColoring {
  std::string text;
  EdgeColoring coloring;
};

inline LoadedColoring load_coloring(const std::string& path) {
  std::string text = read_file(path);
  EdgeColoring g = parse_coloring(text);
  return LoadedColoring{std::move(text), std::move(g)};
}

inline std::uint64_t default_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("MONOCOMP_SEED"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("MONOCOMP_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return fallback;
}

// Runs one command line (args excludes the program name). Reports go to out,
// diagnostics to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic components with many edges in r-edge-colorings of K_n", "monocomp"};
  app.require_subcommand(1);

  std::string echo = "monocomp";
  for (const auto& a : args) echo += " " + a;

  // construct
  auto* construct = app.add_subcommand("construct", "Build a coloring and write it in the coloring text format");
  construct->require_subcommand(1);
  std::string out_path;
  int opt_r = 4, opt_n = 7, opt_k = 2;
  std::string base_path;
  std::uint64_t opt_seed = 0;
  bool seed_given = false;
  auto* c_gyarfas = construct->add_subcommand("gyarfas", "Affine-plane coloring of K_{(r-1)^2}");
  c_gyarfas->add_option("--r", opt_r, "Number of colors (r-1 a supported prime power)")->required();
  auto* c_blowup = construct->add_subcommand("blowup", "Balanced blow-up of a base coloring");
  c_blowup->add_option("--k", opt_k, "Blob size")->required();
  auto* blow_base = c_blowup->add_option("--base", base_path, "Base coloring file");
  c_blowup->add_option("--r", opt_r, "Use the Gyarfas coloring with r colors as base")->excludes(blow_base);
  auto* c_two = construct->add_subcommand("two-color", "Two red cliques of orders (2n+1)/3 and (n-1)/3, blue between");
  c_two->add_option("--n", opt_n, "Vertex count, n = 1 mod 3")->required();
  auto* c_random = construct->add_subcommand("random", "Uniform random coloring");
  c_random->add_option("--n", opt_n, "Vertex count")->required();
  c_random->add_option("--r", opt_r, "Number of colors")->required();
  c_random->add_option("--seed", opt_seed, "RNG seed (default: MONOCOMP_SEED or 1)")->each([&](const std::string&) {
    seed_given = true;
  });
  for (auto* sub : {c_gyarfas, c_blowup, c_two, c_random}) sub->add_option("--out", out_path, "Output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Component decomposition report");
  std::string in_path;
  analyze->add_option("file", in_path, "Coloring file")->required();
  analyze->add_option("--out", out_path, "Write the component table as CSV");

  // bound
  auto* bound = app.add_subcommand("bound", "Fractional-cover bounds for a coloring");
  bound->add_option("file", in_path, "Coloring file")->required();
  std::string gamma_text, weights_path, z_text;
  bool sweep = false;
  int grid = 100;
  bound->add_option("--gamma", gamma_text, "Solve the cover LP at this gamma (p/q or decimal)");
  bound->add_flag("--sweep", sweep, "Sweep gamma over LP breakpoints and a grid; report the best bound");
  bound->add_option("--grid", grid, "Grid denominator for --sweep (0 disables the grid)")->capture_default_str();
  bound->add_option("--weights", weights_path, "Evaluate a weighting file ('component_index p/q' per line)");
  bound->add_option("--z", z_text, "With --weights: round the weighting derandomized at this z");
  bound->add_option("--out", out_path, "With --sweep: write the sweep table as CSV");

  // classify
  auto* classify = app.add_subcommand("classify", "Structural classifiers");
  classify->add_option("file", in_path, "Coloring file")->required();
  bool want_r3 = false, want_grid = false, want_disjoint = false;
  int cover_m = 0;
  std::vector<std::string> bipartite_sets;
  std::string colors_text;
  classify->add_flag("--r3-case", want_r3, "Case split for 3-colorings");
  classify->add_flag("--grid", want_grid, "Detect the 3x3 grid of the extremal 4-coloring");
  classify->add_flag("--disjoint-pair", want_disjoint, "Find two vertex-disjoint components of different colors");
  classify->add_option("--spanning-cover", cover_m, "Find at most m components of distinct colors covering V");
  classify->add_option("--bipartite", bipartite_sets, "Classify the bipartite coloring between A1 and A2 (e.g. 0-2 3,4)")
      ->expected(2);
  classify->add_option("--colors", colors_text, "Color pair for --bipartite, e.g. 2,3 (default: inferred)");

  // search
  auto* search = app.add_subcommand("search", "Exact M(n, r) by exhaustive search");
  SearchConfig cfg;
  std::string symmetry_text = "vertex+color";
  bool no_cutoff = false;
  search->add_option("--n", cfg.n, "Vertex count")->required();
  search->add_option("--r", cfg.r, "Number of colors")->required();
  search->add_option("--symmetry", symmetry_text, "none | vertex | vertex+color")->capture_default_str();
  search->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  search->add_option("--budget-nodes", cfg.budget_nodes, "Refuse searches above this many nodes")->capture_default_str();
  search->add_flag("--no-cutoff", no_cutoff, "Disable branch-and-bound pruning");
  search->add_option("--out", out_path, "Write the witness coloring to this file");

  // verify
  auto* verify = app.add_subcommand("verify", "Soundness scan of the main inequality and the bipartite lemma check");
  SoundnessScanConfig scan;
  int a_max = 4, b_max = 4;
  verify->add_option("--n-max", scan.exhaustive_n_max, "Exhaustive colorings up to this n")->capture_default_str();
  verify->add_option("--r-max", scan.exhaustive_r_max, "Exhaustive colorings up to this r")->capture_default_str();
  verify->add_option("--samples", scan.random_samples, "Random colorings")->capture_default_str();
  verify->add_option("--random-n", scan.random_n, "n of the random colorings")->capture_default_str();
  verify->add_option("--random-r", scan.random_r, "r of the random colorings")->capture_default_str();
  verify->add_option("--subsets", scan.random_subsets, "Random subsets per random coloring")->capture_default_str();
  verify->add_option("--a-max", a_max, "Bipartite lemma: largest side A1")->capture_default_str();
  verify->add_option("--b-max", b_max, "Bipartite lemma: largest side A2")->capture_default_str();
  verify->add_option("--seed", scan.seed, "RNG seed")->capture_default_str();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Report rep(echo);
  try {
    if (construct->parsed()) {
      EdgeColoring g(1, 1);
      if (c_gyarfas->parsed()) {
        g = gyarfas_coloring(opt_r);
      } else if (c_blowup->parsed()) {
        EdgeColoring base = base_path.empty() ? gyarfas_coloring(opt_r) : load_coloring(base_path).coloring;
        g = blow_up(base, opt_k);
      } else if (c_two->parsed()) {
        g = two_color_extremal(opt_n);
      } else {
        std::uint64_t seed = seed_given ? opt_seed : default_seed(1);
        g = random_coloring(opt_n, opt_r, seed);
        rep.add("seed", std::to_string(seed));
      }
      std::string text = to_text(g);
      if (out_path.empty()) {
        out << text;
        return kOk;
      }
      write_file(out_path, text);
      rep.digest(text);
      rep.add("n", g.n());
      rep.add("r", g.r());
      rep.add("written", out_path);
      rep.write(out);
      return kOk;
    }

    if (analyze->parsed()) {
      auto in = load_coloring(in_path);
      rep.digest(in.text);
      ComponentDecomposition d = decompose(in.coloring);
      report_components(rep, d);
      rep.add("equivalence-classes", static_cast<std::int64_t>(equivalence_classes(d).size()));
      rep.add("biconnected-pairs", static_cast<std::int64_t>(biconnected_pairs(d).size()));
      for (std::size_t i = 0; i < d.size(); ++i) {
        const Component& c = d.component(i);
        rep.add("component-" + std::to_string(i), "color=" + std::to_string(c.color) +
                                                      " vertices=" + std::to_string(c.size()) +
                                                      " edges=" + std::to_string(c.edge_count) + " {" +
                                                      join(c.vertices) + "}");
      }
      if (!out_path.empty()) {
        write_file(out_path, components_csv(d));
        rep.add("csv", out_path);
      }
      rep.write(out);
      return kOk;
    }

    if (bound->parsed()) {
      auto in = load_coloring(in_path);
      rep.digest(in.text);
      ComponentDecomposition d = decompose(in.coloring);
      if (d.n() < 2) throw Error("bounds need at least two vertices");
      report_components(rep, d);
      const QuadIrrational actual(max_edge_fraction(d));
      bool any = false;
      if (!gamma_text.empty()) {
        any = true;
        Rational gamma = parse_rational(gamma_text);
        LpResult lp = min_fractional_cover(d, gamma);
        std::string why;
        bool ok = verify_lp_certificate(d, lp, &why);
        rep.add_exact("lp-gamma", gamma);
        rep.add_exact("lp-optimum", lp.optimum);
        rep.add("lp-certificate", ok ? "valid" : "INVALID: " + why);
        rep.add("lp-dual-objective", to_string(lp.dual_objective()));
        std::string weights;
        for (std::size_t i = 0; i < d.size(); ++i)
          if (lp.weights.weights[i] != 0) weights += (weights.empty() ? "" : " ") + std::to_string(i) + ":" + to_string(lp.weights.weights[i]);
        rep.add("lp-weights", weights.empty() ? "-" : weights);
        if (lp.optimum > 0 || gamma < d.r()) rep.add_exact("lp-z-bound", z_lower_bound(BoundQuery{d.r(), gamma, lp.optimum}));
      }
      if (!weights_path.empty()) {
        any = true;
        Weighting w = parse_weights(read_file(weights_path), d);
        WeightingSummary s = evaluate_weighting(d, w);
        rep.add_exact("weights-x", s.x);
        rep.add_exact("weights-gamma-total", s.gamma_total);
        rep.add_exact("weights-gamma-min", s.gamma_min);
        if (s.x > 0 || s.gamma_total < d.r())
          rep.add_exact("weights-z-bound", z_lower_bound(BoundQuery{d.r(), s.gamma_total, s.x}));
        if (!z_text.empty()) {
          RoundingResult rr = round_weighting(d, w, QuadIrrational(parse_rational(z_text)));
          rep.add("rounded-subset", rr.subset.empty() ? "-" : join_indices(rr.subset));
          rep.add_exact("rounded-x", rr.x);
          rep.add_exact("rounded-gamma", rr.gamma);
        }
      }
      if (sweep || !any) {
        ProvableBound best = best_provable_bound(d, grid);
        rep.add_exact("best-z", best.z);
        rep.add_exact("best-gamma", best.gamma);
        rep.add_exact("best-x", best.x);
        std::string bps;
        for (const auto& b : best.breakpoints) bps += (bps.empty() ? "" : " ") + to_string(b);
        rep.add("breakpoints", bps.empty() ? "-" : bps);
        rep.add("gammas-evaluated", static_cast<std::int64_t>(best.evaluated));
        rep.add("bound-vs-actual", actual > best.z ? "above" : (actual == best.z ? "equal" : "VIOLATED"));
        if (!out_path.empty()) {
          std::ostringstream csv;
          csv << "gamma,x,z,z_decimal\n";
          std::vector<Rational> gammas{Rational(0), Rational(d.r())};
          gammas.insert(gammas.end(), best.breakpoints.begin(), best.breakpoints.end());
          std::sort(gammas.begin(), gammas.end());
          for (const auto& g : gammas) {
            LpResult lp = min_fractional_cover(d, g);
            QuadIrrational z = z_lower_bound(BoundQuery{d.r(), g, lp.optimum});
            csv << to_string(g) << ',' << to_string(lp.optimum) << ',' << z.to_string() << ',' << to_decimal(z) << '\n';
          }
          write_file(out_path, csv.str());
          rep.add("csv", out_path);
        }
      }
      rep.write(out);
      return kOk;
    }

    if (classify->parsed()) {
      auto in = load_coloring(in_path);
      rep.digest(in.text);
      ComponentDecomposition d = decompose(in.coloring);
      bool found_all = true, any = false;
      if (want_r3) {
        any = true;
        R3Classification c = classify_r3(d);
        rep.add("r3-case", to_string(c.tag));
        if (c.single_component_color) rep.add("r3-single-color", *c.single_component_color);
        if (c.witness) rep.add("r3-witness", join_indices({(*c.witness)[0], (*c.witness)[1], (*c.witness)[2]}));
        if (c.tag == R3Classification::Case::Unclassified) found_all = false;
      }
      if (want_grid) {
        any = true;
        auto grid_found = detect_gyarfas_grid(d);
        rep.add("grid", grid_found ? "found" : "none");
        if (grid_found) {
          rep.add("grid-row-color", grid_found->row_color);
          rep.add("grid-column-color", grid_found->column_color);
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
              rep.add("cell-" + std::to_string(i + 1) + std::to_string(j + 1), join(grid_found->cells[i][j]));
          rep.add("transversals", join_indices(grid_found->transversals));
        } else {
          found_all = false;
        }
      }
      if (want_disjoint) {
        any = true;
        auto pair = detect_disjoint_pair(d);
        rep.add("disjoint-pair", pair ? std::to_string(pair->first) + "," + std::to_string(pair->second) : "none");
        if (!pair) found_all = false;
      }
      if (cover_m > 0) {
        any = true;
        auto cover = find_spanning_cover(d, cover_m);
        rep.add("spanning-cover", cover ? join_indices(*cover) : "none");
        if (!cover) found_all = false;
      }
      if (!bipartite_sets.empty()) {
        any = true;
        auto a1 = parse_vertex_list(bipartite_sets.at(0)), a2 = parse_vertex_list(bipartite_sets.at(1));
        std::pair<Color, Color> colors;
        if (!colors_text.empty()) {
          auto cs = parse_vertex_list(colors_text);
          if (cs.size() != 2) throw Error("--colors needs exactly two colors");
          colors = {cs[0], cs[1]};
        } else {
          std::vector<bool> used(static_cast<std::size_t>(in.coloring.r()), false);
          for (Vertex u : a1)
            for (Vertex v : a2) {
              if (u == v || u < 0 || v < 0 || u >= d.n() || v >= d.n()) throw Error("invalid bipartite sides");
              used[static_cast<std::size_t>(in.coloring.color(u, v))] = true;
            }
          std::vector<Color> pick;
          for (Color c = 0; c < in.coloring.r(); ++c)
            if (used[static_cast<std::size_t>(c)]) pick.push_back(c);
          for (Color c = 0; pick.size() < 2 && c < in.coloring.r(); ++c)
            if (!used[static_cast<std::size_t>(c)]) pick.push_back(c);
          if (pick.size() != 2) throw Error("the bipartite graph uses more than two colors (or r < 2)");
          colors = {pick[0], pick[1]};
        }
        auto bc = classify_bipartite(in.coloring, a1, a2, colors);
        rep.add("bipartite-colors", std::to_string(colors.first) + "," + std::to_string(colors.second));
        if (bc) {
          rep.add("bipartite-case", to_string(bc->kind));
          if (bc->kind == BipartiteCase::Kind::C) rep.add("bipartite-direction", to_string(bc->direction));
          for (std::size_t i = 0; i < bc->certificate.size(); ++i) {
            const auto& p = bc->certificate[i];
            rep.add("certificate-" + std::to_string(i),
                    "color=" + std::to_string(p.color) + " weight=" + to_string(p.weight) + " {" + join(p.vertices) + "}");
          }
          rep.add("certificate-valid", validate_bipartite_certificate(a1, a2, *bc) ? "yes" : "NO");
        } else {
          rep.add("bipartite-case", "none");
          found_all = false;
        }
      }
      if (!any) {
        err << "usage error: classify needs at least one of --r3-case, --grid, --disjoint-pair, --spanning-cover, --bipartite\n";
        return kUsage;
      }
      rep.write(out);
      return found_all ? kOk : kNotFound;
    }

    if (search->parsed()) {
      cfg.symmetry = parse_symmetry(symmetry_text);
      cfg.objective_cutoff = !no_cutoff;
      SearchResult res = exact_M(cfg);
      rep.add("n", cfg.n);
      rep.add("r", cfg.r);
      rep.add("symmetry", to_string(cfg.symmetry));
      rep.add("value", res.value);
      rep.add_exact("value-fraction", Rational(Integer(res.value), Integer(choose2(cfg.n))));
      rep.add("nodes", std::to_string(res.nodes));
      rep.add("leaves", std::to_string(res.leaves));
      std::string witness = to_text(res.witness);
      rep.add("witness-digest", "sha256:" + Report::sha256_hex(witness));
      if (!out_path.empty()) {
        write_file(out_path, witness);
        rep.add("witness", out_path);
      }
      rep.write(out);
      return kOk;
    }

    if (verify->parsed()) {
      SoundnessReport s = scan_bound_soundness(scan);
      BipartiteLemmaReport b = verify_bipartite_lemma(a_max, b_max);
      rep.add("soundness-colorings", s.colorings);
      rep.add("soundness-subsets", s.subsets_checked);
      rep.add("soundness-lp-checks", s.lp_checks);
      rep.add("soundness-equality-cases", s.equality_cases);
      rep.add("soundness-violations", s.violations);
      for (const auto& v : s.examples) rep.add("violation", v.what + " in " + to_text(v.coloring));
      rep.add("bipartite-colorings", b.colorings);
      for (const auto& [k, v] : b.case_counts) rep.add("bipartite-case-" + k, v);
      rep.add("bipartite-failures", b.failures);
      rep.write(out);
      return s.violations == 0 && b.failures == 0 ? kOk : kNotFound;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace monocomp::cli
