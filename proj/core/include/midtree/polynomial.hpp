#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "midtree/rational.hpp"

namespace midtree {

/// Dense univariate polynomial in lambda with exact rational coefficients,
/// stored in ascending degree. Trailing zeros are trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);

  static RationalPolynomial constant(const Rational& c);
  /// lambda - root
  static RationalPolynomial linear_factor(const Rational& root);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of lambda^k; zero past the degree.
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& at) const;
  RationalPolynomial pow(unsigned exponent) const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// `c0 c1 ... cn`, rationals as `p/q`. The zero polynomial renders as `0`.
std::string to_string(const RationalPolynomial& p);

}  // namespace midtree
