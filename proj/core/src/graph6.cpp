#include "uberhom/graph6.hpp"

#include "uberhom/error.hpp"

namespace uberhom {

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::kParse, "empty graph6 string", 0);
  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= text.size()) throw Error(ErrorCode::kParse, "truncated graph6 string", pos);
    auto byte = static_cast<unsigned char>(text[pos]);
    if (byte < 63 || byte > 126) throw Error(ErrorCode::kParse, "byte outside 63..126", pos);
    ++pos;
    return byte - 63U;
  };
  std::size_t n = next();
  if (n == 63) {
    std::size_t width = 3;
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      width = 6;
    }
    n = 0;
    for (std::size_t k = 0; k < width; ++k) n = (n << 6) | next();
  }
  if (n > 64) throw Error(ErrorCode::kGuard, "graphs are limited to 64 vertices");
  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  unsigned chunk = 0;
  int left = 0;
  std::size_t i = 0;
  std::size_t j = 1;
  for (std::size_t b = 0; b < bits; ++b) {
    if (left == 0) {
      chunk = next();
      left = 6;
    }
    --left;
    if ((chunk >> left) & 1U) g.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    if (++i == j) {
      i = 0;
      ++j;
    }
  }
  if (pos != text.size()) throw Error(ErrorCode::kParse, "trailing bytes after graph6 body", pos);
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63U) + 63);
  }
  unsigned chunk = 0;
  int filled = 0;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

}  // namespace uberhom
