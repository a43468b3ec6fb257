#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace uberhom {

// Bit-vector on at most 64 vertices; bit v is the colour of vertex v.
class Colouring {
 public:
  Colouring() = default;
  Colouring(std::size_t length, std::uint64_t mask);
  static Colouring from_bits(const std::vector<int>& bits);
  // "1101" lists vertex 0 first.
  static Colouring parse(const std::string& text);

  std::size_t length() const noexcept { return length_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool bit(std::size_t v) const { return ((mask_ >> v) & 1U) != 0; }
  std::size_t level() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::size_t length_ = 0;
  std::uint64_t mask_ = 0;
};

// Colourings obtained by flipping a single 0 to 1, by increasing flipped index.
std::vector<Colouring> covers(const Colouring& e);

// Index of the flipped bit; throws kNotAdjacent unless b covers a.
std::size_t flipped_index(const Colouring& a, const Colouring& b);

// Koszul sign: parity of the 1 bits of a below the flipped index.
int sign(const Colouring& a, const Colouring& b);

// All colourings of the given length and level, by increasing mask.
std::vector<Colouring> colourings_of_level(std::size_t length, std::size_t level);

// Every square a < b, b' < c of B(m) satisfies s(a,b) + s(b,c) = s(a,b') + s(b',c) + 1 mod 2.
bool sign_square_condition(std::size_t m);

}  // namespace uberhom
