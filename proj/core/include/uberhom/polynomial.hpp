#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace uberhom {

// Integer polynomial, constant term first, trailing zeros trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
  std::int64_t coefficient(std::size_t k) const;
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  std::int64_t evaluate(std::int64_t x) const;
  // Index of the lowest nonzero coefficient, -1 for zero.
  int lowest_degree() const noexcept;
  // "x^10 + 10x^9 + ... + 10x^4"
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

}  // namespace uberhom
