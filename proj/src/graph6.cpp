#include "kfs/graph6.hpp"

#include <cstdint>

namespace kfs {

namespace {

constexpr int kBias = 63;

bool printable(char c) {
  const auto b = static_cast<unsigned char>(c);
  return b >= 63 && b <= 126;
}

std::string_view strip(std::string_view s) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  std::string_view s = strip(text);
  if (s.empty()) throw Graph6Error("graph6: empty record");
  for (char c : s) {
    if (!printable(c)) {
      throw Graph6Error("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                        " outside 63..126");
    }
  }

  long long n = 0;
  std::size_t pos = 0;
  if (s[0] != '~') {
    n = s[0] - kBias;
    pos = 1;
  } else if (s.size() >= 2 && s[1] == '~') {
    throw Graph6Error("graph6: 8-byte size prefix (n > 258047) is not supported");
  } else {
    if (s.size() < 4) throw Graph6Error("graph6: truncated size prefix");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - kBias);
    if (n < 63) throw Graph6Error("graph6: long size prefix used for n < 63");
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds build limit " +
                      std::to_string(kMaxVertices));
  }

  const long long nbits = n * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != nbytes) {
    throw Graph6Error("graph6: expected " + std::to_string(nbytes) + " data bytes for n=" +
                      std::to_string(n) + ", got " + std::to_string(s.size() - pos));
  }

  GraphBuilder b(static_cast<int>(n));
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int byte = s[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (nbits % 6 != 0) {
    const int last = s.back() - kBias;
    const int pad = static_cast<int>(6 - nbits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string graph6_encode(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph6Line> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    Graph6Line rec;
    rec.line_number = number;
    rec.text = line;
    try {
      rec.graph = graph6_decode(line);
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace kfs
