#include "padicert/matrix.hpp"

#include "padicert/error.hpp"

namespace padicert {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, 1); }

QMatrix QMatrix::scalar(std::size_t n, const Rational& c) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::companion(const IntPolynomial& f) {
  if (f.degree() < 1) throw InvalidArgument("companion matrix needs degree >= 1");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  QMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational c(-f[i], f.leading());
    c.canonicalize();
    m(i, n - 1) = c;
  }
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rational>& entries) {
  QMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

QMatrix QMatrix::parse(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t row_start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k < text.size() && text[k] != ';') continue;
    std::vector<Rational> row;
    std::size_t entry_start = row_start;
    for (std::size_t e = row_start; e <= k; ++e) {
      if (e < k && text[e] != ',') continue;
      try {
        row.push_back(parse_rational(text.substr(entry_start, e - entry_start)));
      } catch (const ParseError& err) {
        throw ParseError("bad matrix entry", entry_start + err.position());
      }
      entry_start = e + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged matrix row", row_start);
    rows.push_back(std::move(row));
    row_start = k + 1;
  }
  return from_rows(rows);
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum dimension mismatch");
  QMatrix out(a);
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + Rational(-1) * b; }

QMatrix operator*(const Rational& c, const QMatrix& a) {
  QMatrix out(a);
  for (auto& x : out.data_) x *= c;
  return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw InvalidArgument("vector length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Rational QMatrix::determinant() const {
  if (!is_square()) throw InvalidArgument("determinant of a non-square matrix");
  QMatrix a(*this);
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t pivot = c;
    while (pivot < rows_ && a(pivot, c) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (a(r, c) == 0) continue;
      const Rational factor = a(r, c) / a(c, c);
      for (std::size_t j = c; j < cols_; ++j) a(r, j) -= factor * a(c, j);
    }
  }
  return det;
}

QMatrix QMatrix::inverse() const {
  if (!is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix a(*this);
  QMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw DivisionByZero("matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    const Rational scale = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational factor = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(c, j);
        inv(r, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

QMatrix QMatrix::pow(unsigned long e) const {
  if (!is_square()) throw InvalidArgument("power of a non-square matrix");
  QMatrix result = identity(rows_);
  QMatrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool QMatrix::is_scalar() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? (*this)(i, j) != (*this)(0, 0) : (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

QMatrix QMatrix::evaluate(const IntPolynomial& p) const {
  QMatrix acc(rows_, cols_);
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * (*this) + scalar(rows_, Rational(c[k]));
  return acc;
}

std::string QMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += padicert::to_string((*this)(i, j));
    }
  }
  return out;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

}  // namespace padicert
