#include "uberhom/polynomial.hpp"

namespace uberhom {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::int64_t IntPolynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : 0;
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * x + *it;
  return value;
}

int IntPolynomial::lowest_degree() const noexcept {
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    std::int64_t c = coefficients_[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || k == 0) out += std::to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace uberhom
