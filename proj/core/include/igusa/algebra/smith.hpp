#pragma once

#include <string>
#include <vector>

#include "igusa/algebra/rational.hpp"

namespace igusa {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& row_major);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... .
struct SmithForm {
  IntegerMatrix D, U, V;
  std::vector<BigInt> invariant_factors;  // nonzero diagonal entries
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& A);

}  // namespace igusa
