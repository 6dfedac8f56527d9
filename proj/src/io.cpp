#include "copath/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace copath {

namespace {

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoll(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size();
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<Graph> g;
  long long declared_edges = 0;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = split(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      long long n = 0;
      if (g) throw ParseError(line_no, "second header");
      if (tok.size() != 4 || tok[1] != "edge" || !parse_int(tok[2], n) || !parse_int(tok[3], declared_edges) ||
          n < 0 || declared_edges < 0 || n > 100'000'000) {
        throw ParseError(line_no, "malformed header, expected `p edge <n> <m>`");
      }
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (tok[0] != "e") throw ParseError(line_no, "unknown line type `" + tok[0] + "`");
    if (!g) throw ParseError(line_no, "edge line before header");
    long long u = 0, v = 0;
    if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v)) {
      throw ParseError(line_no, "malformed edge line, expected `e <u> <v>`");
    }
    const long long n = g->vertex_count();
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    if (g->adjacent(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  }
  if (!g) throw ParseError(line_no, "missing header");
  if (g->edge_count() != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                  std::to_string(g->edge_count()));
  }
  return std::move(*g);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  const VertexSet alive = g.vertices();
  auto id = [&](Vertex v) { return std::lower_bound(alive.begin(), alive.end(), v) - alive.begin() + 1; };
  out << "p edge " << alive.size() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << id(e.u) << ' ' << id(e.v) << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace copath
