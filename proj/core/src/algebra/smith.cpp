#include "igusa/algebra/smith.hpp"

#include <sstream>

namespace igusa {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& row_major)
    : IntegerMatrix(rows, cols) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("matrix data has wrong size");
  for (std::size_t i = 0; i < row_major.size(); ++i) a_[i] = row_major[i];
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimensions do not match");
  IntegerMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row a -= q * row b
void add_row(IntegerMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}
void add_col(IntegerMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& A) {
  SmithForm s{A, IntegerMatrix::identity(A.rows()), IntegerMatrix::identity(A.cols()), {}, 0};
  IntegerMatrix& D = s.D;
  std::size_t n = std::min(A.rows(), A.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the remaining block goes to (t, t)
      std::size_t pr = t, pc = t;
      bool found = false;
      for (std::size_t i = t; i < D.rows(); ++i)
        for (std::size_t j = t; j < D.cols(); ++j)
          if (D(i, j) != 0 && (!found || abs(D(i, j)) < abs(D(pr, pc)))) {
            pr = i;
            pc = j;
            found = true;
          }
      if (!found) goto done;
      swap_rows(D, t, pr);
      swap_rows(s.U, t, pr);
      swap_cols(D, t, pc);
      swap_cols(s.V, t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row(D, i, t, q);
        add_row(s.U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col(D, j, t, q);
        add_col(s.V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: fold an offending row into row t and repeat
      bool divisible = true;
      for (std::size_t i = t + 1; i < D.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(D, t, i, BigInt(-1));
            add_row(s.U, t, i, BigInt(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < D.cols(); ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < s.U.cols(); ++j) s.U(t, j) = -s.U(t, j);
    }
    s.invariant_factors.push_back(D(t, t));
    ++s.rank;
  }
done:
  return s;
}

}  // namespace igusa
