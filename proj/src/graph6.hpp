#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace icc {

// Thrown on malformed graph6 text.
struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Decodes one graph6 line (without trailing newline). Supports n <= 62 via the
// single size byte and the '~'-prefixed extended form up to n = 64.
Graph parse_graph6(std::string_view line);

// Canonical minimal-length labeled encoding; parse(encode(g)) == g exactly.
std::string encode_graph6(const Graph& g);

struct StreamItem {
  int line_number;  // 1-based
  Graph graph;      // valid only when error is empty
  std::string error;
};

// Splits source into lines, skips blanks and the ">>graph6<<" header, and
// decodes each remaining line. Decode failures become items with a non-empty
// error; the stream keeps going.
std::vector<StreamItem> read_graph6_stream(std::string_view source);

}  // namespace icc
