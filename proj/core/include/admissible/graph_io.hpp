#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "admissible/graph.hpp"

namespace admissible {

// Parse or decode failure; line is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text: one "u v" pair per line, 0-based indices. Blank lines and
// lines starting with '#' are skipped. Order is max index + 1.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6, the 6-bit printable encoding used by the standard small-graph
// corpora. Decoding is strict: wrong length, characters outside 63..126 and
// nonzero padding bits are all rejected.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

enum class GraphFormat { edge_list, graph6 };

// Reads one graph from a file in the given format (for graph6, the first
// non-empty line). Throws ParseError or std::runtime_error.
Graph read_graph_file(const std::string& path, GraphFormat format);

}  // namespace admissible
