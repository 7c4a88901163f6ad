#include "planerig/graph6.hpp"

#include <sstream>

#include "planerig/errors.hpp"

namespace planerig {
namespace {

constexpr int kBias = 63;

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("truncated graph6 data", pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63)
    throw ParseError("character outside graph6 range 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  std::size_t pos = 0;
  long long n = sextet(text, pos++);
  if (n == 63) {
    if (text.size() > 1 && text[1] == '~') {
      pos = 2;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(text, pos++);
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++);
    }
  }
  if (n > kMaxVertices)
    throw CapExceeded("graph6 header declares " + std::to_string(n) + " vertices; at most " +
                      std::to_string(kMaxVertices) + " are supported");
  const auto order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::size_t body = pos;
  if (text.size() < body + bytes) throw ParseError("truncated graph6 bit stream", text.size());
  if (text.size() > body + bytes) throw ParseError("trailing data after graph6 bit stream", body + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(text, body + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back(Edge{i + 1, j + 1});
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((sextet(text, body + k / 6) >> (5 - k % 6)) & 1)
      throw ParseError("nonzero padding bits", body + k / 6);
  }
  return Graph(order, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0, line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t line_len = line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view(line);
    std::size_t skip = 0;
    if (view.starts_with(">>graph6<<")) skip = 10;
    view.remove_prefix(skip);
    if (!view.empty()) {
      try {
        out.push_back(parse_graph6(view));
      } catch (const ParseError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" (byte"));
        throw ParseError(msg + " on line " + std::to_string(line_no),
                         offset + skip + e.offset());
      }
    }
    offset += line_len;
  }
  return out;
}

std::string write_graph6_lines(const std::vector<Graph>& graphs) {
  std::string out;
  for (const auto& g : graphs) {
    out += emit_graph6(g);
    out += '\n';
  }
  return out;
}

}  // namespace planerig
