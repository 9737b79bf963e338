#include "chroma/graph6.hpp"

#include "chroma/errors.hpp"

namespace chroma {

namespace {
constexpr int kBias = 63;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line", 0);

  const int header = static_cast<unsigned char>(line[0]);
  if (header == 126) throw ParseError("graph6: multi-byte size header (n > 62) is unsupported", 0);
  if (header < kBias || header > 126) throw ParseError("graph6: size byte out of range", 0);
  const int n = header - kBias;
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < 1 + body) throw ParseError("graph6: truncated adjacency section", line.size());
  if (line.size() > 1 + body) throw ParseError("graph6: trailing bytes after adjacency", 1 + body);

  std::vector<VertexSet> rows(n);
  // Column-major upper triangle: j = 1..n-1, i = 0..j-1.
  std::size_t k = 0;
  int i = 0;
  int j = 1;
  for (std::size_t b = 0; b < body; ++b) {
    const int byte = static_cast<unsigned char>(line[1 + b]);
    if (byte < kBias || byte > 126) throw ParseError("graph6: adjacency byte out of range", 1 + b);
    const int value = byte - kBias;
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool set = (value >> shift) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bit", 1 + b);
        continue;
      }
      if (set) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw UnsupportedSize("graph6: order " + std::to_string(n) + " exceeds " +
                          std::to_string(kGraph6MaxOrder));
  if (n < 1) throw InvalidParameter("graph6: graph must have at least one vertex");

  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
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

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), pos + e.offset());
      }
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace chroma
