#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "copath/graph.hpp"

namespace copath {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// DIMACS-like text: `c ...` comments, one `p edge <n> <m>` header, then
// `e <u> <v>` lines with 1-based endpoints.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

// Writes alive vertices only after compacting ids; for an undamaged graph
// ids are preserved.
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace copath
