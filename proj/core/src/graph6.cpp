#include "forkdiv/graph6.hpp"

#include <istream>
#include <ostream>

namespace forkdiv {

namespace {

constexpr int kBias = 63;   // printable offset
constexpr int kLong = 126;  // '~', long order form marker

int sextet_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size())
    throw DecodeError("graph6 line truncated", pos);
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kLong)
    throw DecodeError("graph6 byte out of range 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw DecodeError("empty graph6 line", 0);

  std::size_t pos = 0;
  long long n;
  if (static_cast<unsigned char>(text[0]) == kLong) {
    // '~' long form: 18-bit big-endian order in three sextets. A second '~'
    // would start the 36-bit form, far beyond the 64-vertex cap.
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kLong)
      throw DecodeError("graph order exceeds 64", 1);
    pos = 1;
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet_at(text, pos++);
  } else {
    n = sextet_at(text, 0);
    pos = 1;
  }
  if (n < 1) throw DecodeError("graph order must be at least 1", 0);
  if (n > kMaxVertices) throw DecodeError("graph order exceeds 64", 0);

  const int order = static_cast<int>(n);
  Graph g(order);
  std::vector<std::pair<int, int>> edges;
  const long long bit_count = n * (n - 1) / 2;
  int accum = 0, have = 0;
  long long bit = 0;
  for (int col = 1; col < order; ++col) {
    for (int row = 0; row < col; ++row) {
      if (have == 0) {
        accum = sextet_at(text, pos++);
        have = 6;
      }
      if (accum & (1 << (have - 1))) edges.emplace_back(row, col);
      --have;
      ++bit;
    }
  }
  (void)bit_count;
  if (have > 0 && (accum & ((1 << have) - 1)) != 0)
    throw DecodeError("nonzero padding bits", pos - 1);
  if (pos != text.size())
    throw DecodeError("trailing bytes after graph6 payload", pos);
  return Graph(order, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLong));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int accum = 0, have = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      accum = (accum << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++have == 6) {
        out.push_back(static_cast<char>(accum + kBias));
        accum = 0;
        have = 0;
      }
    }
  }
  if (have > 0)
    out.push_back(static_cast<char>((accum << (6 - have)) + kBias));
  return out;
}

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw DecodeError("edge list: missing n m header", 0);
  if (n < 1 || n > kMaxVertices)
    throw DecodeError("edge list: order out of range 1..64", 0);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw DecodeError("edge list: truncated at edge " + std::to_string(i), 0);
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw DecodeError("edge list: bad endpoint in edge " + std::to_string(i), 0);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  auto es = g.edges();
  out << g.size() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

std::string_view strip_graph6_header(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  return line;
}

}  // namespace forkdiv
