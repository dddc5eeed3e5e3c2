#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "edgepoly/edgepoly.hpp"
#include "report.hpp"

namespace edgepoly::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kDomain = 3, kResource = 4 };

/// A probability given on the command line: decimal, fraction, or 1/sqrt(3).
struct Probability {
  std::string text;
  double value = 0.0;
  std::optional<mpq_class> exact;  ///< set when the input is rational
  bool inv_sqrt3 = false;
};

inline Probability parse_probability(const std::string& text) {
  Probability p;
  p.text = text;
  if (text == "1/sqrt(3)" || text == "1/sqrt3") {
    p.inv_sqrt3 = true;
    p.value = 1.0 / std::sqrt(3.0);
    return p;
  }
  mpq_class q;
  try {
    if (text.find('/') != std::string::npos) {
      q = mpq_class(text);
      if (q.get_den() == 0) throw std::invalid_argument(text);
    } else {
      const auto dot = text.find('.');
      std::string digits = text;
      std::string scale = "1";
      if (dot != std::string::npos) {
        digits = text.substr(0, dot) + text.substr(dot + 1);
        scale += std::string(text.size() - dot - 1, '0');
      }
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(text);
      q = mpq_class(digits + "/" + scale);
    }
  } catch (const std::invalid_argument&) {
    throw ValidationError("cannot parse probability '" + text + "'");
  }
  q.canonicalize();
  if (q < 0 || q > 1) throw ValidationError("probability must lie in [0, 1]");
  p.exact = q;
  p.value = q.get_d();
  return p;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

inline long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("cannot parse " + what + " '" + s + "'");
  }
}

inline std::uint64_t parse_seed(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ValidationError("cannot parse seed '" + s + "'");
  return v;
}

inline Vertex parse_vertex(const Graph& g, const std::string& s) {
  const long long v = parse_int(s, "vertex");
  if (v < 1 || static_cast<std::size_t>(v) > g.vertex_count())
    throw ValidationError("vertex " + s + " outside 1.." + std::to_string(g.vertex_count()));
  return static_cast<Vertex>(v - 1);
}

inline VertexSet parse_vertex_set(const Graph& g, const std::string& s) {
  VertexSet out(g.vertex_count());
  for (const auto& tok : split(s, ','))
    if (!tok.empty()) out.insert(parse_vertex(g, tok));
  return out;
}

/// "1-2,3-4" -> edges.
inline std::vector<Edge> parse_edges(const Graph& g, const std::string& s) {
  std::vector<Edge> out;
  for (const auto& tok : split(s, ',')) {
    const auto parts = split(tok, '-');
    if (parts.size() != 2) throw ValidationError("edge '" + tok + "' must look like u-v");
    out.push_back(make_edge(parse_vertex(g, parts[0]), parse_vertex(g, parts[1])));
  }
  if (out.empty()) throw ValidationError("--face needs at least one edge");
  return out;
}

inline Graph generate_graph(const std::vector<std::string>& words) {
  const std::string& kind = words.at(0);
  auto arg = [&](std::size_t i) -> long long {
    if (words.size() <= i) throw ValidationError("generate: kind '" + kind + "' needs more parameters");
    return parse_int(words[i], "parameter");
  };
  auto count = [&](std::size_t i) -> std::size_t {
    const long long v = arg(i);
    if (v < 0) throw ValidationError("generate: parameters must be non-negative");
    return static_cast<std::size_t>(v);
  };
  auto expect = [&](std::size_t params) {
    if (words.size() != params + 1)
      throw ValidationError("generate: kind '" + kind + "' takes " + std::to_string(params) + " parameter(s)");
  };
  if (kind == "complete") return expect(1), gen::complete(count(1));
  if (kind == "complete_bipartite") return expect(2), gen::complete_bipartite(count(1), count(2));
  if (kind == "cycle") return expect(1), gen::cycle(count(1));
  if (kind == "path") return expect(1), gen::path(count(1));
  if (kind == "windmill") return expect(1), gen::windmill(count(1));
  if (kind == "petersen") return expect(0), gen::petersen();
  if (kind == "heawood") return expect(0), gen::heawood();
  if (kind == "gnp") {
    expect(3);
    const Probability p = parse_probability(words[2]);
    return gen::gnp(count(1), p.value, parse_seed(words[3]));
  }
  throw ValidationError("generate: unknown kind '" + kind + "'");
}

inline unsigned default_threads() {
  if (const char* env = std::getenv("EDGEPOLY_THREADS")) {
    const long long v = parse_int(env, "EDGEPOLY_THREADS");
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Parses argv, runs one subcommand and writes a single report to `out`.
/// Diagnostics go to `err`; nothing is written to `out` on failure.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of edge polytopes of graphs", "edgepoly"};
  app.require_subcommand(1);
  bool pretty = false;
  unsigned threads = 0;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");
  app.add_option("--threads", threads, "Worker thread cap (default: EDGEPOLY_THREADS or hardware)");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "Dimension, f0, f1 and bound checks");
  analyze->add_option("file", file, "Edge-list file")->required();

  std::size_t max_n = FacetOptions{}.max_n;
  bool with_oracle = false;
  auto* facets = app.add_subcommand("facets", "Facet certificates and bound checks");
  facets->add_option("file", file, "Edge-list file")->required();
  facets->add_option("--max-n", max_n, "Vertex-count cap for facet enumeration");
  facets->add_flag("--oracle", with_oracle, "Cross-check against brute-force exact facets");

  std::optional<std::size_t> k_opt;
  auto* neighborly = app.add_subcommand("neighborly", "k-neighborliness verdict with witness");
  neighborly->add_option("file", file, "Edge-list file")->required();
  neighborly->add_option("--k", k_opt, "Test this k (default: find the maximum)");

  std::string face;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact face test for a set of polytope vertices");
  oracle_cmd->add_option("file", file, "Edge-list file")->required();
  oracle_cmd->add_option("--face", face, "Graph edges u-v, comma separated")->required();

  std::size_t rn = 0, trials = 0;
  std::string p_text;
  std::uint64_t seed = 0;
  auto* random = app.add_subcommand("random", "Monte-Carlo estimate of E f1 for G(n,p)");
  random->add_option("--n", rn, "Vertices")->required();
  random->add_option("--p", p_text, "Edge probability: decimal, a/b, or 1/sqrt(3)")->required();
  random->add_option("--trials", trials, "Number of samples")->required();
  random->add_option("--seed", seed, "64-bit seed")->required();

  std::size_t walk_k = 0;
  std::vector<std::string> path_ends;
  std::string sets;
  auto* walks = app.add_subcommand("walks", "Non-returning walks, k-paths, discrepancy");
  walks->add_option("file", file, "Edge-list file")->required();
  walks->add_option("--k", walk_k, "Walk / path length")->required();
  walks->add_option("--paths", path_ends, "Count k-paths from u to v")->expected(2);
  walks->add_option("--sets", sets, "Discrepancy for S;T, e.g. 1,2,3;4,5");

  std::vector<std::string> kind;
  std::string out_path;
  auto* generate = app.add_subcommand("generate", "Write a generated graph");
  generate->add_option("--kind", kind, "complete N | complete_bipartite A B | cycle N | path N | windmill K | "
                                       "petersen | heawood | gnp N P SEED")
      ->required()
      ->expected(1, 4);
  generate->add_option("--out", out_path, "Output edge-list file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "edgepoly: " << e.what() << '\n';
    return kValidation;
  }
  if (threads == 0) {
    try {
      threads = default_threads();
    } catch (const ValidationError& e) {
      err << "edgepoly: " << e.what() << '\n';
      return kValidation;
    }
  }

  Json report;
  Json input;
  Json result;
  Json warnings = Json::array();
  auto* sub = app.get_subcommands().front();
  report["command"] = sub->get_name();

  try {
    if (sub == analyze) {
      input["file"] = file;
      const Graph g = read_edge_list_file(file);
      result = summary_json(g, summary(g));
    } else if (sub == facets) {
      input["file"] = file;
      input["max_n"] = max_n;
      input["oracle"] = with_oracle;
      if (max_n > FacetOptions{}.max_n)
        warnings.push_back("facet enumeration cap raised to n = " + std::to_string(max_n));
      const Graph g = read_edge_list_file(file);
      const FacetOptions opts{max_n};
      const FacetList list = enumerate_facets(g, opts);
      const std::size_t dim = dimension(g);
      result["dim"] = dim;
      result["count"] = list.facets.size();
      Json fs = Json::array();
      for (const auto& c : list.facets) fs.push_back(certificate_json(g, c));
      result["facets"] = fs;
      Json merged = Json::array();
      for (const auto& m : list.merges) {
        Json mj = certificate_json(g, m.duplicate);
        mj["same_face_as"] = m.kept;
        merged.push_back(mj);
        warnings.push_back(std::string("merged ") + to_string(m.duplicate.kind) + " certificate into facet " +
                           std::to_string(m.kept));
      }
      result["merged"] = merged;
      const std::size_t count = list.facets.size();
      Json bounds;
      bounds["upper"] = dim < 63 ? Json((std::uint64_t{1} << dim) + dim) : Json(nullptr);
      bounds["upper_ok"] = dim >= 63 || count <= (std::uint64_t{1} << dim) + dim;
      bounds["lower"] = dim / 3 < 32 ? Json(std::uint64_t{1} << (2 * (dim / 3))) : Json(nullptr);
      bounds["exceeds_lower"] = dim / 3 < 32 && count > (std::uint64_t{1} << (2 * (dim / 3)));
      result["bounds"] = bounds;
      if (with_oracle) {
        const auto brute = oracle::tight_sets(oracle::brute_facets(g));
        std::set<std::vector<std::size_t>> ours;
        for (const auto& c : list.facets) ours.insert(c.facet_vertices);
        result["oracle"] = {{"count", brute.size()}, {"oracle_match", brute == ours}};
      }
    } else if (sub == neighborly) {
      input["file"] = file;
      input["k"] = k_opt ? Json(*k_opt) : Json(nullptr);
      const Graph g = read_edge_list_file(file);
      if (k_opt) {
        const bool verdict = is_k_neighborly(g, *k_opt);
        result["k"] = *k_opt;
        result["neighborly"] = verdict;
        const auto w = verdict ? std::nullopt : find_forbidden(g, *k_opt);
        result["witness"] = w ? witness_json(*w) : Json(nullptr);
      } else {
        const Neighborliness nb = max_neighborliness(g);
        result["simplex"] = nb.simplex;
        result["max_k"] = nb.simplex ? Json(nullptr) : Json(nb.k);
        const auto w = nb.simplex ? std::nullopt : find_forbidden(g, nb.k + 1);
        result["witness"] = w ? witness_json(*w) : Json(nullptr);
      }
    } else if (sub == oracle_cmd) {
      input["file"] = file;
      input["face"] = face;
      const Graph g = read_edge_list_file(file);
      const auto edges = parse_edges(g, face);
      std::vector<std::size_t> idx;
      Json face_json = Json::array();
      for (const Edge& e : edges) {
        const auto i = g.edge_index(e.u, e.v);
        if (!i) throw ValidationError("{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "} is not an edge");
        idx.push_back(*i);
        face_json.push_back(edge_json(e));
      }
      const auto pts = oracle::polytope_vertices(g);
      const oracle::FaceTest t = oracle::face_test(pts, idx);
      result["face"] = face_json;
      result["is_face"] = t.is_face;
      if (t.is_face) {
        result["witness_point"] = nullptr;
      } else {
        Json wp = Json::array();
        for (const auto& x : t.witness_point) wp.push_back(exact(x));
        result["witness_point"] = wp;
      }
    } else if (sub == random) {
      const Probability p = parse_probability(p_text);
      input = {{"n", rn}, {"p", p.text}, {"trials", trials}, {"seed", seed}};
      const ExperimentReport r = estimate_f1_mc(rn, p.value, trials, seed, threads);
      result["n"] = r.n;
      result["p"] = r.p;
      result["trials"] = r.trials;
      result["seed"] = r.seed;
      result["mean_f1"] = exact(r.mean_f1);
      result["mean_f1_value"] = r.mean_f1.get_d();
      result["stderr"] = r.stderr_f1;
      result["expected_f1"] = r.expected_f1;
      if (p.exact) result["expected_f1_exact"] = exact(expected_f1_exact(rn, *p.exact));
      else if (p.inv_sqrt3) result["expected_f1_exact"] = exact(expected_f1_inv_sqrt3(rn));
      else result["expected_f1_exact"] = nullptr;
      result["z_score"] = r.z_score ? Json(*r.z_score) : Json(nullptr);
      if (p.inv_sqrt3) warnings.push_back("sampling uses the double approximation of 1/sqrt(3)");
      if (trials < 30) warnings.push_back("fewer than 30 trials; the standard error is not meaningful");
    } else if (sub == walks) {
      input["file"] = file;
      input["k"] = walk_k;
      const Graph g = read_edge_list_file(file);
      result = walk_json(non_returning_walks(g, walk_k));
      if (!path_ends.empty()) {
        const Vertex u = parse_vertex(g, path_ends[0]);
        const Vertex v = parse_vertex(g, path_ends[1]);
        input["paths"] = {u + 1, v + 1};
        result["paths"] = {{"u", u + 1}, {"v", v + 1}, {"count", count_k_paths(g, u, v, walk_k)}};
      }
      if (!sets.empty()) {
        const auto parts = split(sets, ';');
        if (parts.size() != 2) throw ValidationError("--sets must look like S;T");
        const VertexSet s = parse_vertex_set(g, parts[0]);
        const VertexSet t = parse_vertex_set(g, parts[1]);
        input["sets"] = sets;
        result["discrepancy"] = {{"S", labels(s.to_vector())},
                                 {"T", labels(t.to_vector())},
                                 {"edges_between", edges_between(g, s, t)},
                                 {"value", exact(discrepancy(g, s, t))}};
      }
    } else if (sub == generate) {
      input["kind"] = kind;
      input["out"] = out_path.empty() ? Json(nullptr) : Json(out_path);
      const Graph g = generate_graph(kind);
      result["n"] = g.vertex_count();
      result["e"] = g.edge_count();
      if (out_path.empty()) {
        Json es = Json::array();
        for (const Edge& e : g.edges()) es.push_back(edge_json(e));
        result["edges"] = es;
      } else {
        std::ofstream f(out_path);
        if (!f) throw ValidationError("cannot write '" + out_path + "'");
        write_edge_list(f, g);
        if (!f) throw ValidationError("failed writing '" + out_path + "'");
        result["file"] = out_path;
      }
    }
  } catch (const ValidationError& e) {
    err << "edgepoly: " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    err << "edgepoly: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    err << "edgepoly: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    err << "edgepoly: " << e.what() << '\n';
    return kValidation;
  }

  report["input"] = input;
  report["result"] = result;
  report["warnings"] = warnings;
  report["version"] = kVersion;
  if (pretty) render_pretty(out, report);
  else out << report.dump(2) << '\n';
  return kOk;
}

}  // namespace edgepoly::cli
