#include "uberhom/poset.hpp"

#include <bit>

#include "uberhom/error.hpp"

namespace uberhom {

Colouring::Colouring(std::size_t length, std::uint64_t mask) : length_(length), mask_(mask) {
  if (length > 64) throw Error(ErrorCode::kMalformedInput, "colourings support at most 64 vertices");
  if (length < 64 && (mask >> length) != 0) {
    throw Error(ErrorCode::kMalformedInput, "colouring mask exceeds its length");
  }
}

Colouring Colouring::from_bits(const std::vector<int>& bits) {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < bits.size(); ++v) {
    if (bits[v] != 0 && bits[v] != 1) throw Error(ErrorCode::kMalformedInput, "colour must be 0 or 1");
    if (bits[v] == 1) mask |= std::uint64_t{1} << v;
  }
  return Colouring(bits.size(), mask);
}

Colouring Colouring::parse(const std::string& text) {
  std::vector<int> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw Error(ErrorCode::kMalformedInput, "colouring must be a 0/1 string");
    bits.push_back(ch - '0');
  }
  return from_bits(bits);
}

std::size_t Colouring::level() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::string Colouring::to_string() const {
  std::string s(length_, '0');
  for (std::size_t v = 0; v < length_; ++v) {
    if (bit(v)) s[v] = '1';
  }
  return s;
}

std::vector<Colouring> covers(const Colouring& e) {
  std::vector<Colouring> out;
  for (std::size_t v = 0; v < e.length(); ++v) {
    if (!e.bit(v)) out.emplace_back(e.length(), e.mask() | (std::uint64_t{1} << v));
  }
  return out;
}

std::size_t flipped_index(const Colouring& a, const Colouring& b) {
  if (a.length() != b.length() || (a.mask() & ~b.mask()) != 0 ||
      std::popcount(b.mask() ^ a.mask()) != 1) {
    throw Error(ErrorCode::kNotAdjacent, a.to_string() + " is not covered by " + b.to_string());
  }
  return static_cast<std::size_t>(std::countr_zero(b.mask() ^ a.mask()));
}

int sign(const Colouring& a, const Colouring& b) {
  std::size_t t = flipped_index(a, b);
  std::uint64_t below = t == 0 ? 0 : (a.mask() & ((std::uint64_t{1} << t) - 1));
  return std::popcount(below) & 1;
}

std::vector<Colouring> colourings_of_level(std::size_t length, std::size_t level) {
  if (length > 30) throw Error(ErrorCode::kGuard, "too many vertices to enumerate colourings");
  std::vector<Colouring> out;
  if (level > length) return out;
  if (level == 0) return {Colouring(length, 0)};
  // Gosper's hack walks masks of fixed popcount in increasing order.
  std::uint64_t mask = (std::uint64_t{1} << level) - 1;
  const std::uint64_t limit = std::uint64_t{1} << length;
  while (mask < limit) {
    out.emplace_back(length, mask);
    std::uint64_t c = mask & (~mask + 1);
    std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

bool sign_square_condition(std::size_t m) {
  if (m > 20) throw Error(ErrorCode::kGuard, "square check limited to m <= 20");
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < total; ++x) {
    Colouring a(m, x);
    for (std::size_t s = 0; s < m; ++s) {
      if ((x >> s) & 1U) continue;
      for (std::size_t t = s + 1; t < m; ++t) {
        if ((x >> t) & 1U) continue;
        Colouring b(m, x | (std::uint64_t{1} << s));
        Colouring b2(m, x | (std::uint64_t{1} << t));
        Colouring c(m, x | (std::uint64_t{1} << s) | (std::uint64_t{1} << t));
        int left = sign(a, b) + sign(b, c);
        int right = sign(a, b2) + sign(b2, c) + 1;
        if ((left - right) % 2 != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace uberhom
