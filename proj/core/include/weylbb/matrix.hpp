#pragma once

#include "weylbb/ratfun.hpp"

namespace weylbb {

// Dense matrix over the rational function field. Small sizes, exact entries.
class Matrix {
 public:
  Matrix(VarTableP tab, std::size_t rows, std::size_t cols)
      : tab_(std::move(tab)), rows_(rows), cols_(cols),
        a_(rows * cols, RatFun::zero(tab_)) {}

  static Matrix identity(VarTableP tab, std::size_t n);

  const VarTableP& table() const { return tab_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFun& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
  const RatFun& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

  bool is_zero() const;
  Matrix operator-() const;
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  Matrix scale(const RatFun& c) const;
  Matrix transpose() const;
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix derive(std::size_t var) const;  // entrywise d/dx_var

  // Exact Gauss-Jordan inverse; throws SingularMatrix naming the first column
  // without a usable pivot.
  Matrix inverse() const;

  static Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

 private:
  VarTableP tab_;
  std::size_t rows_, cols_;
  std::vector<RatFun> a_;
};

}  // namespace weylbb
