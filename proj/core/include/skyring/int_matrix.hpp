#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skyring {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Int> row(std::size_t r) const;
  std::vector<Int> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Int> values);

  IntMatrix transposed() const;
  std::vector<Int> apply(std::span<const Int> v) const;
  Int max_abs() const;

  std::vector<std::vector<Int>> to_rows() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(Int k, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Classical adjugate, so that m * adjugate(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Integer inverse when det(m) = ±1, nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// echelon with positive pivots, entries above each pivot reduced into
/// [0, pivot), zero rows dropped. Two row sets span the same lattice iff
/// their Hermite forms are equal.
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (as rows, in Hermite normal form) of the integer kernel
/// {x in Z^n : a x = 0} of an m x n matrix.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace skyring
