#include "kneser/io.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace kneser {

std::string subset_label(std::uint64_t bits) {
  std::string out = "{";
  bool first = true;
  while (bits) {
    const int e = std::countr_zero(bits);
    bits &= bits - 1;
    if (!first) out += ",";
    out += std::to_string(e + 1);
    first = false;
  }
  out += "}";
  return out;
}

namespace {

void write_header(std::ostream& out, const Graph& g) {
  out << "# family=" << family_name(g.family());
  if (g.has_subset_vertices())
    out << " n=" << g.ground_n() << " k=" << g.subset_k();
  if (g.param_r() >= 0) out << " r=" << g.param_r();
  if (g.param_d() >= 0) out << " d=" << g.param_d();
  if (g.param_i() >= 0) out << " i=" << g.param_i();
  out << " vertices=" << g.vertex_count() << "\n";
}

}  // namespace

void write_edgelist(std::ostream& out, const Graph& g) {
  write_header(out, g);
  for (std::int64_t u = 0; u < g.vertex_count(); ++u)
    for (const std::int64_t v : g.neighbors(u))
      if (v > u) out << u << " " << v << "\n";
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph {\n";
  for (std::int64_t u = 0; u < g.vertex_count(); ++u) {
    out << "  " << u << " [label=\"";
    if (g.has_subset_vertices())
      out << subset_label(g.vertex_bits(u));
    else
      out << u;
    out << "\"];\n";
  }
  for (std::int64_t u = 0; u < g.vertex_count(); ++u)
    for (const std::int64_t v : g.neighbors(u))
      if (v > u) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

Graph load_edgelist(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::int64_t vertex_count = -1;
  std::int64_t max_endpoint = -1;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("vertices=");
      if (pos != std::string::npos) {
        std::istringstream token(line.substr(pos + 9));
        if (!(token >> vertex_count) || vertex_count < 0)
          throw std::invalid_argument("malformed vertices= token in header");
      }
      continue;
    }
    std::istringstream row(line);
    std::int64_t u = 0, v = 0;
    if (!(row >> u >> v))
      throw std::invalid_argument("malformed edge at line " + std::to_string(line_no));
    edges.emplace_back(u, v);
    max_endpoint = std::max({max_endpoint, u, v});
  }
  if (vertex_count < 0) vertex_count = max_endpoint + 1;
  return Graph::from_edges(vertex_count, edges);
}

}  // namespace kneser
