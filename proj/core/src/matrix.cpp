#include "midtree/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace midtree {
namespace {

std::size_t find_label(const std::vector<std::string>& labels, std::string_view label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

void require_square(const RationalMatrix& a, const char* what) {
  if (!a.is_square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shapes differ");
  }
}

Integer lcm_of_denominators(const RationalMatrix& a, std::size_t row) {
  Integer l = 1;
  for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(row, j).get_den_mpz_t());
  return l;
}

using IntegerMatrix = std::vector<std::vector<Integer>>;

// Integer matrix equal to s * A together with s.
std::pair<IntegerMatrix, Integer> clear_all_denominators(const RationalMatrix& a) {
  Integer s = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer l = lcm_of_denominators(a, i);
    mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), l.get_mpz_t());
  }
  IntegerMatrix out(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[i][j] = a(i, j).get_num() * (s / a(i, j).get_den());
    }
  }
  return {std::move(out), std::move(s)};
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  const std::size_t n = a.size();
  IntegerMatrix out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace

RationalMatrix::RationalMatrix(std::vector<std::string> labels)
    : row_labels_(labels), col_labels_(std::move(labels)), data_(rows() * cols()) {}

RationalMatrix::RationalMatrix(std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      data_(rows() * cols()) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows.size(); ++i) labels.push_back(std::to_string(i));
  RationalMatrix m(std::move(labels));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("from_rows: ragged or non-square input");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::vector<std::string> labels) {
  RationalMatrix m(std::move(labels));
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 1;
  return m;
}

std::size_t RationalMatrix::row_index(std::string_view label) const {
  return find_label(row_labels_, label);
}

std::size_t RationalMatrix::col_index(std::string_view label) const {
  return find_label(col_labels_, label);
}

Rational& RationalMatrix::at(std::string_view row, std::string_view col) {
  return (*this)(row_index(row), col_index(col));
}

const Rational& RationalMatrix::at(std::string_view row, std::string_view col) const {
  return (*this)(row_index(row), col_index(col));
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& x : out.data_) x = -x;
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  RationalMatrix out(a.row_labels_, b.col_labels_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Rational determinant(const RationalMatrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  Integer scale = 1;
  IntegerMatrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Integer l = lcm_of_denominators(a, i);
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }

  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }

  Rational det(m[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

RationalMatrix delete_row_col(const RationalMatrix& a, std::size_t index) {
  require_square(a, "delete_row_col");
  if (index >= a.rows()) throw std::out_of_range("delete_row_col: index out of range");
  std::vector<std::string> rl = a.row_labels();
  std::vector<std::string> cl = a.col_labels();
  rl.erase(rl.begin() + static_cast<std::ptrdiff_t>(index));
  cl.erase(cl.begin() + static_cast<std::ptrdiff_t>(index));
  RationalMatrix out(std::move(rl), std::move(cl));
  for (std::size_t i = 0, oi = 0; i < a.rows(); ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, oj = 0; j < a.cols(); ++j) {
      if (j == index) continue;
      out(oi, oj++) = a(i, j);
    }
    ++oi;
  }
  return out;
}

RationalMatrix delete_row_col(const RationalMatrix& a, std::string_view label) {
  return delete_row_col(a, a.row_index(label));
}

RationalPolynomial char_poly(const RationalMatrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  auto [b, s] = clear_all_denominators(a);

  // c[k] is the coefficient of lambda^k in det(lambda I - s*A).
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntegerMatrix mk(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) mk[i][i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix am = multiply(b, mk);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    assert(mpz_divisible_ui_p(trace.get_mpz_t(), k) != 0);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -q;
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k];
    mk = std::move(am);
  }

  // det(lambda I - A) = s^-n det(s lambda I - sA)
  std::vector<Rational> coeffs(n + 1);
  Integer s_power = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    coeffs[k] = Rational(c[k], s_power);
    coeffs[k].canonicalize();
    s_power *= s;
  }
  return RationalPolynomial(std::move(coeffs));
}

Rational adjugate_trace(const RationalMatrix& a) {
  require_square(a, "adjugate_trace");
  const std::size_t n = a.rows();
  if (n == 0) throw std::invalid_argument("adjugate_trace: empty matrix");
  const Rational a1 = char_poly(a).coefficient(1);
  return (n - 1) % 2 == 0 ? a1 : Rational(-a1);
}

}  // namespace midtree
