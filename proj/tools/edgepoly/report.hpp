#pragma once

// JSON serialization of library results. Vertex labels are 1-based here,
// exact rationals are strings "p/q".

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "edgepoly/edgepoly.hpp"

namespace edgepoly::cli {

using Json = nlohmann::ordered_json;

inline std::string exact(const mpq_class& q) { return q.get_str(); }
inline std::string exact(const mpz_class& z) { return z.get_str(); }

inline Json labels(const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v + 1);
  return out;
}

inline Json edge_json(const Edge& e) { return Json::array({e.u + 1, e.v + 1}); }

inline Json edges_json(const Graph& g, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(edge_json(g.edge(i)));
  return out;
}

inline Json summary_json(const Graph& g, const PolytopeSummary& s) {
  const auto dec = decompose(g);
  Json j;
  j["n"] = s.n;
  j["e"] = s.e;
  j["components"] = dec.count();
  j["c0"] = dec.c0;
  j["dim"] = s.dim;
  j["f0"] = s.f0;
  j["f1"] = s.f1;
  j["c4"] = count_c4(g);
  j["k4"] = count_k4(g);
  j["edge_bound"] = {{"applies", s.dim + 1 >= 4}, {"ok", s.edge_bound_ok}, {"tight", s.edge_bound_tight}};
  j["f1_bound"] = {{"ok", s.f1_bound_ok}, {"tight", s.f1_bound_tight}};
  return j;
}

inline Json certificate_json(const Graph& g, const FacetCertificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["support"] = labels(c.support);
  j["inequality"] = c.inequality;
  j["facet_vertices"] = edges_json(g, c.facet_vertices);
  return j;
}

inline Json witness_json(const ForbiddenWitness& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  Json cycles = Json::array();
  for (const auto& c : w.cycles) cycles.push_back(labels(c));
  j["cycles"] = cycles;
  j["path"] = labels(w.path);
  j["total_size"] = w.total_size;
  return j;
}

inline Json walk_json(const WalkStats& s) {
  Json j;
  j["k"] = s.k;
  j["total"] = exact(s.total);
  j["nu"] = exact(s.nu);
  j["moore_bound"] = exact(s.moore_bound);
  j["bound_holds"] = s.bound_holds ? Json(*s.bound_holds) : Json(nullptr);
  return j;
}

/// Indented key/value rendering for --pretty.
inline void render_pretty(std::ostream& out, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& v = it.value();
      const bool scalar_array = v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured() && !x.is_array(); });
      if (v.is_primitive() || (scalar_array && v.dump().size() <= 72)) {
        out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      } else {
        out << pad << it.key() << ":\n";
        render_pretty(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || (v.is_array() && v.dump().size() <= 72)) {
        out << pad << "- " << v.dump() << '\n';
      } else {
        out << pad << "-\n";
        render_pretty(out, v, indent + 2);
      }
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

}  // namespace edgepoly::cli
