#include "admissible/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace admissible {

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex max_v = -1;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream in{std::string(line)};
    long long u, v;
    if (!(in >> u >> v)) throw ParseError(line_no, "expected two vertex indices");
    std::string trailing;
    if (in >> trailing) throw ParseError(line_no, "trailing characters after edge");
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex index");
    if (u == v) throw ParseError(line_no, "self loop rejected");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_v = std::max({max_v, static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(max_v + 1, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

constexpr int kG6Offset = 63;

bool g6_char_ok(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty graph6 string");
  for (char c : text)
    if (!g6_char_ok(c)) throw ParseError(0, "character outside graph6 range");

  size_t at = 0;
  long long n;
  if (text[0] != '~') {
    n = text[0] - kG6Offset;
    at = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError(0, "graph6 order above 2^18 not supported");
    if (text.size() < 4) throw ParseError(0, "truncated graph6 order");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kG6Offset);
    at = 4;
  }
  if (n < 0) throw ParseError(0, "bad graph6 order");

  long long bits = n * (n - 1) / 2;
  size_t need = static_cast<size_t>((bits + 5) / 6);
  if (text.size() - at != need) throw ParseError(0, "graph6 body length mismatch");

  std::vector<std::pair<Vertex, Vertex>> edges;
  long long bit_index = 0;
  for (Vertex col = 1; col < n; ++col)
    for (Vertex row = 0; row < col; ++row) {
      int byte = text[at + static_cast<size_t>(bit_index / 6)] - kG6Offset;
      int bit = (byte >> (5 - (bit_index % 6))) & 1;
      if (bit) edges.emplace_back(row, col);
      ++bit_index;
    }
  // Padding bits beyond the triangle must be zero.
  for (long long pad = bits; pad < static_cast<long long>(need) * 6; ++pad) {
    int byte = text[at + static_cast<size_t>(pad / 6)] - kG6Offset;
    if ((byte >> (5 - (pad % 6))) & 1) throw ParseError(0, "nonzero graph6 padding");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string graph6_encode(const Graph& g) {
  long long n = g.order();
  if (n > (1 << 18) - 1) throw std::invalid_argument("graph too large for graph6 encoder");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
  long long bits = n * (n - 1) / 2;
  std::vector<uint8_t> body(static_cast<size_t>((bits + 5) / 6), 0);
  long long bit_index = 0;
  for (Vertex col = 1; col < n; ++col)
    for (Vertex row = 0; row < col; ++row) {
      if (g.has_edge(row, col))
        body[static_cast<size_t>(bit_index / 6)] |=
            static_cast<uint8_t>(1u << (5 - (bit_index % 6)));
      ++bit_index;
    }
  for (uint8_t b : body) out.push_back(static_cast<char>(b + kG6Offset));
  return out;
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  // graph6: first non-empty line
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return graph6_decode(line);
  }
  throw ParseError(0, "no graph6 line found in " + path);
}

}  // namespace admissible
