#include "midtree/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace midtree {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::linear_factor(const Rational& root) {
  return RationalPolynomial({Rational(-root), Rational(1)});
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::pow(unsigned exponent) const {
  RationalPolynomial result = constant(1);
  RationalPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

std::string to_string(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.coefficients()) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out;
}

}  // namespace midtree
