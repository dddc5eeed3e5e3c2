#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"

namespace edgepoly {

// Edge-list text format:
//   # comment
//   n 7            optional header fixing the vertex count
//   1 2            one edge per line, 1-based labels
// Without a header n is the largest label seen.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_label(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ValidationError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<long long, long long>> raw;
  long long header_n = -1;
  long long max_label = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (toks[0] == "n") {
      if (header_n != -1 || !raw.empty())
        throw ValidationError("line " + std::to_string(line_no) + ": header 'n <count>' must precede all edges");
      if (toks.size() != 2) throw ValidationError("line " + std::to_string(line_no) + ": malformed header");
      header_n = detail::parse_label(toks[1], line_no);
      if (header_n < 1) throw ValidationError("line " + std::to_string(line_no) + ": vertex count must be positive");
      continue;
    }
    if (toks.size() != 2)
      throw ValidationError("line " + std::to_string(line_no) + ": expected two vertex labels");
    const long long a = detail::parse_label(toks[0], line_no);
    const long long b = detail::parse_label(toks[1], line_no);
    if (a < 1 || b < 1) throw ValidationError("line " + std::to_string(line_no) + ": labels are 1-based");
    max_label = std::max({max_label, a, b});
    raw.emplace_back(a, b);
  }
  const long long n = header_n == -1 ? max_label : header_n;
  if (n < 1) throw ValidationError("edge list is empty and has no header");
  if (max_label > n)
    throw ValidationError("vertex label " + std::to_string(max_label) + " exceeds header n = " + std::to_string(n));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(raw.size());
  for (auto [a, b] : raw) pairs.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  return Graph(static_cast<std::size_t>(n), pairs);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  return read_edge_list(in);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

/// Always writes the header so isolated trailing vertices survive a round trip.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace edgepoly
