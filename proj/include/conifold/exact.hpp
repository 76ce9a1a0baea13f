#pragma once

// Exact integer and rational arithmetic shared by every module: GMP scalar
// aliases, dense matrices, fraction-free elimination and null spaces.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace conifold {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

// Row echelon form by Bareiss fraction-free elimination. Every intermediate
// entry stays an integer (a minor of the input).
struct EchelonForm {
  IntMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[i] is the pivot of row i
  int sign = 1;                            // parity of the row swaps
};

EchelonForm bareiss_echelon(IntMatrix m);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

// Basis of {x : m x = 0}. The basis is canonical: one vector per non-pivot
// column, with a 1 in that column and 0 in every other free column.
std::vector<std::vector<Rational>> nullspace(const IntMatrix& m);

// Clears denominators and removes content; the result is zero iff v is.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);
Integer content(std::span<const Integer> v);
Integer lcm_of_denominators(std::span<const Rational> v);

std::optional<std::int64_t> to_int64(const Integer& z);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace conifold
