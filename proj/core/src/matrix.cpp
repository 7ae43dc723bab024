#include "weylbb/matrix.hpp"

#include "weylbb/error.hpp"

namespace weylbb {

Matrix Matrix::identity(VarTableP tab, std::size_t n) {
  Matrix m(std::move(tab), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFun::one(m.tab_);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& e : m.a_) e = -e;
  return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  check_same_table(x.tab_, y.tab_);
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch in addition");
  Matrix m = x;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += y.a_[i];
  return m;
}

Matrix operator-(const Matrix& x, const Matrix& y) { return x + (-y); }

Matrix operator*(const Matrix& x, const Matrix& y) {
  check_same_table(x.tab_, y.tab_);
  if (x.cols_ != y.rows_) throw Error("matrix shape mismatch in product");
  Matrix m(x.tab_, x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (y.at(k, j).is_zero()) continue;
        m.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    }
  return m;
}

Matrix Matrix::scale(const RatFun& c) const {
  Matrix m = *this;
  for (auto& e : m.a_) e *= c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(tab_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::derive(std::size_t var) const {
  Matrix m = *this;
  for (auto& e : m.a_) e = e.derive(var);
  return m;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(tab_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == n)
      throw SingularMatrix("matrix is singular: no pivot in column " + std::to_string(col), col);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    RatFun d = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      RatFun f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace weylbb
