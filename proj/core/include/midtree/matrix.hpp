#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "midtree/polynomial.hpp"
#include "midtree/rational.hpp"

namespace midtree {

/// Dense matrix of exact rationals with labeled rows and columns.
///
/// Square matrices built from a digraph share one label sequence for rows
/// and columns (the canonical vertex order), so an entry can be addressed
/// either by index or by vertex label. Rectangular matrices only show up
/// as the incidence-style blocks of the middle-digraph Laplacian.
class RationalMatrix {
 public:
  RationalMatrix() = default;

  /// Square zero matrix whose rows and columns carry `labels`.
  explicit RationalMatrix(std::vector<std::string> labels);

  /// Rectangular zero matrix.
  RationalMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  /// Unlabeled square matrix from row-major data; labels become "0", "1", ...
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::vector<std::string> labels);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool is_square() const { return rows() == cols(); }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }

  /// Label addressing; throws std::out_of_range for an unknown label.
  Rational& at(std::string_view row, std::string_view col);
  const Rational& at(std::string_view row, std::string_view col) const;

  std::size_t row_index(std::string_view label) const;
  std::size_t col_index(std::string_view label) const;

  bool is_diagonal() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.data_ == b.data_;
  }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a);
  /// Row labels come from `a`, column labels from `b`.
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<Rational> data_;
};

/// Exact determinant. The 0x0 determinant is 1.
///
/// Every row is scaled by the lcm of its denominators, the resulting
/// integer matrix goes through fraction-free Bareiss elimination, and the
/// scaling product is divided back out. Pivots are the first nonzero entry
/// in row order. Throws std::invalid_argument for a non-square matrix.
Rational determinant(const RationalMatrix& a);

/// Copy of `a` with row and column `label` removed. Labels keep their
/// order. Throws std::out_of_range for an unknown label.
RationalMatrix delete_row_col(const RationalMatrix& a, std::string_view label);
RationalMatrix delete_row_col(const RationalMatrix& a, std::size_t index);

/// det(lambda I - A), monic of degree n.
///
/// Faddeev-LeVerrier run over the integer matrix s*A (s = lcm of all
/// denominators), then rescaled; every division in the recurrence is exact.
RationalPolynomial char_poly(const RationalMatrix& a);

/// Trace of the adjugate, read off the linear coefficient of the
/// characteristic polynomial: tr(adj A) = (-1)^(n-1) * [lambda^1] f(A).
/// Throws std::invalid_argument for the 0x0 matrix.
Rational adjugate_trace(const RationalMatrix& a);

}  // namespace midtree
