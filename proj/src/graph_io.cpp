#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "trifree/graph.hpp"

namespace trifree {

namespace {

constexpr char kMinByte = 63;
constexpr char kMaxByte = 126;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

int checked_byte(char c, std::size_t pos) {
  if (c < kMinByte || c > kMaxByte)
    throw ParseError(fmt::format("graph6 byte {} at offset {} is outside [63, 126]",
                                 static_cast<int>(static_cast<unsigned char>(c)), pos));
  return c - kMinByte;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw GraphError(fmt::format("graph6 encoding supports at most {} vertices", kGraph6MaxOrder));
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kMinByte));
  } else {
    out.push_back(kMaxByte);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kMinByte));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kMinByte));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kMinByte));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != kMaxByte) {
    n = checked_byte(text[0], 0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == kMaxByte)
      throw ParseError("graph6 8-byte size form (n > 258047) is not supported");
    if (text.size() < 4) throw ParseError("truncated graph6 size header");
    for (pos = 1; pos < 4; ++pos) n = (n << 6) | checked_byte(text[pos], pos);
  }

  const std::int64_t nbits = pair_count(n);
  const std::size_t expected = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() - pos != expected)
    throw ParseError(fmt::format("graph6 body for n = {} needs {} bytes, got {}", n, expected,
                                 text.size() - pos));

  std::vector<Edge> edges;
  std::int64_t bit = 0;
  int i = 0, j = 1;
  for (std::size_t b = pos; b < text.size(); ++b) {
    const int value = checked_byte(text[b], b);
    for (int k = 5; k >= 0 && bit < nbits; --k, ++bit) {
      if ((value >> k) & 1) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<Edge> edges;
  long long n = -1, m = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long x = 0, y = 0;
    std::string trailing;
    if (!(fields >> x >> y) || (fields >> trailing))
      throw ParseError(fmt::format("edge list line {}: expected two integers", line_no));
    if (n < 0) {
      if (x < 0 || y < 0) throw ParseError("edge list header must be non-negative \"n m\"");
      n = x;
      m = y;
      continue;
    }
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw ParseError(fmt::format("edge list line {}: endpoint outside [0, {})", line_no, n));
    edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
  }
  if (n < 0) throw ParseError("edge list has no \"n m\" header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(fmt::format("edge list header announces {} edges, found {}", m, edges.size()));
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace trifree
