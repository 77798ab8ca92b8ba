#include <string>

#include "c4ex/graph.hpp"

namespace c4ex {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::int64_t kMaxGraph6Order = (std::int64_t{1} << 36) - 1;

void encode_order(std::int64_t n, std::string& out) {
  auto put_bits = [&](int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    put_bits(3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put_bits(6);
  }
}

}  // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  encode_order(n, out);

  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Graph6Error("unexpected end of input", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte " + std::to_string(c) + " outside [63,126]", i);
    return c - 63;
  };

  std::int64_t n = 0;
  int first = byte_at(pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else {
    int groups = 3;
    std::size_t start = pos + 1;
    if (byte_at(pos + 1) == 63) {
      groups = 6;
      start = pos + 2;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | byte_at(start + i);
    pos = start + groups;
  }
  if (n > kMaxGraph6Order || n > std::int64_t{1} << 30) throw Graph6Error("order too large", pos);

  const int order = static_cast<int>(n);
  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body) {
    throw Graph6Error("expected " + std::to_string(body) + " adjacency bytes, found " +
                          std::to_string(text.size() - pos),
                      text.size() < pos + body ? text.size() : pos + body);
  }

  Graph g(order);
  std::int64_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((byte_at(at) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((byte_at(last) & ((1 << pad) - 1)) != 0) throw Graph6Error("nonzero padding bits", last);
  }
  return g;
}

}  // namespace c4ex
