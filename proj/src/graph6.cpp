#include "graph6.hpp"

#include <string>

namespace icc {

namespace {

constexpr char kHeader[] = ">>graph6<<";

void check_byte(char c, size_t pos) {
  unsigned char b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw Graph6Error("invalid graph6 byte at position " + std::to_string(pos));
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6Error("empty graph6 string");
  for (size_t i = 0; i < line.size(); ++i) check_byte(line[i], i);

  size_t pos = 0;
  int n;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw Graph6Error("graph6 order beyond capacity");
    if (line.size() < 4) throw Graph6Error("truncated extended size field");
    long big = 0;
    for (int i = 1; i <= 3; ++i) big = (big << 6) | (line[i] - 63);
    if (big > kMaxVertices) throw Graph6Error("graph6 order beyond capacity");
    n = static_cast<int>(big);
    pos = 4;
  } else {
    n = line[0] - 63;
    pos = 1;
  }

  int nbits = n * (n - 1) / 2;
  size_t need = (nbits + 5) / 6;
  if (line.size() - pos < need) throw Graph6Error("truncated graph6 bit payload");
  if (line.size() - pos > need) throw Graph6Error("trailing bytes after graph6 payload");

  std::vector<Mask> adj(n, 0);
  int k = 0;  // bit index over the column-major upper triangle
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  return Graph::from_adjacency(std::move(adj));
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  size_t base = out.size();
  out.append(nbytes, 0);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j)) out[base + k / 6] |= char(1 << (5 - k % 6));
  for (int b = 0; b < nbytes; ++b) out[base + b] += 63;
  return out;
}

std::vector<StreamItem> read_graph6_stream(std::string_view source) {
  std::vector<StreamItem> items;
  int line_number = 0;
  size_t start = 0;
  while (start <= source.size()) {
    size_t end = source.find('\n', start);
    std::string_view line = source.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_number;
    if (end == std::string_view::npos && line.empty()) break;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.substr(0, sizeof(kHeader) - 1) == kHeader)
      line.remove_prefix(sizeof(kHeader) - 1);
    if (!line.empty()) {
      StreamItem item;
      item.line_number = line_number;
      try {
        item.graph = parse_graph6(line);
      } catch (const Graph6Error& e) {
        item.error = e.what();
      }
      items.push_back(std::move(item));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return items;
}

}  // namespace icc
