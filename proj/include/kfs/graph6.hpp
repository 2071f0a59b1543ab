#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kfs/graph.hpp"

namespace kfs {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest order representable without the 8-byte "~~" size prefix.
inline constexpr int kGraph6MaxOrder = 258047;

/// Decodes one graph6 record. An optional ">>graph6<<" header and a trailing
/// newline or CR are accepted. Padding bits must be zero.
/// Throws Graph6Error on malformed input or unsupported size.
Graph graph6_decode(std::string_view text);

/// Encodes g as a graph6 record without the trailing newline.
std::string graph6_encode(const Graph& g);

/// One parsed line of a graph6 stream. `error` is empty on success.
struct Graph6Line {
  std::size_t line_number = 0;
  std::string text;
  Graph graph;
  std::string error;
};

/// Reads every non-blank line of a graph6 stream. Malformed lines are kept
/// with `error` set so callers can report them and continue.
std::vector<Graph6Line> read_graph6_stream(std::istream& in);

}  // namespace kfs
