#pragma once

#include "flatkit/cyclotomic.hpp"
#include "flatkit/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace flatkit {

// Minimal scalar interface needed by fraction-free elimination. The "_like"
// constructors carry the domain (cyclotomic order) of an existing value.
template <typename S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
  static bool same_domain(const Rational&, const Rational&) { return true; }
};

template <>
struct ScalarOps<Cyclotomic> {
  static Cyclotomic zero_like(const Cyclotomic& a) { return Cyclotomic::zero(a.order()); }
  static Cyclotomic one_like(const Cyclotomic& a) { return Cyclotomic::one(a.order()); }
  static bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
  static Cyclotomic exact_div(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }
  static bool same_domain(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order();
  }
};

// Dense rectangular matrix over one exact scalar domain.
template <typename S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const S& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  Matrix(std::size_t rows, std::size_t cols)
    requires std::is_same_v<S, Rational>
      : Matrix(rows, cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const S& zero() const { return zero_; }

  S& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<S> column(std::size_t c) const {
    std::vector<S> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
  }

  Matrix select_columns(const std::vector<int>& idx) const {
    Matrix out(rows_, idx.size(), zero_);
    for (std::size_t j = 0; j < idx.size(); ++j)
      for (std::size_t r = 0; r < rows_; ++r) out.at(r, j) = at(r, idx[j]);
    return out;
  }

  Matrix with_appended_column(const std::vector<S>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    Matrix out(rows_, cols_ + 1, zero_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
      out.at(r, cols_) = v[r];
    }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  S zero_;
  std::vector<S> data_;
};

// Exact rank by fraction-free (Bareiss) elimination with row swaps and column
// skips. Every division is by the previous pivot and is exact: over a field
// trivially, and over an integral domain because each entry stays a minor of
// the original matrix (Bareiss determinant identity).
template <typename S>
std::size_t matrix_rank(const Matrix<S>& input) {
  using Ops = ScalarOps<S>;
  const std::size_t rows = input.rows(), cols = input.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<S>> m(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    m[r].reserve(cols);
    for (std::size_t c = 0; c < cols; ++c) m[r].push_back(input.at(r, c));
  }
  S prev = Ops::one_like(input.zero());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && Ops::is_zero(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m[pivot].swap(m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = Ops::exact_div(m[r][c] * m[rank][col] - m[r][col] * m[rank][c], prev);
      }
      m[r][col] = Ops::zero_like(prev);
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// True iff v lies in the column span of a: rank([a | v]) == rank(a).
template <typename S>
bool in_span(const std::vector<S>& v, const Matrix<S>& a) {
  if (v.size() != a.rows()) throw std::invalid_argument("vector length mismatch");
  for (const auto& x : v)
    if (!ScalarOps<S>::same_domain(x, a.zero()))
      throw std::invalid_argument("scalar domain mismatch");
  return matrix_rank(a.with_appended_column(v)) == matrix_rank(a);
}

}  // namespace flatkit
