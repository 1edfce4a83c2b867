#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "padicert/arith.hpp"
#include "padicert/polynomial.hpp"

namespace padicert {

/// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix scalar(std::size_t n, const Rational& c);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Companion matrix of f / lc(f); deg f >= 1.
  static QMatrix companion(const IntPolynomial& f);
  static QMatrix diagonal(const std::vector<Rational>& entries);
  /// Rows separated by ';', entries by ',': "1,1;0,1". Entries may be a/b.
  static QMatrix parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& a);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  QMatrix transpose() const;
  Rational determinant() const;
  /// Throws DivisionByZero when singular.
  QMatrix inverse() const;
  QMatrix pow(unsigned long e) const;
  bool is_scalar() const;
  bool is_zero() const;

  /// p(M) by Horner.
  QMatrix evaluate(const IntPolynomial& p) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product a (x) b.
QMatrix kron(const QMatrix& a, const QMatrix& b);

}  // namespace padicert
