#include "skyring/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "skyring/error.hpp"

namespace skyring {

namespace {

[[noreturn]] void overflow() {
  throw Error(ErrorCode::overflow, "integer overflow in exact arithmetic");
}

Int narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) overflow();
  return static_cast<Int>(v);
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row operation: row_t <- row_t - k * row_s.
void sub_row(IntMatrix& m, std::size_t t, std::size_t s, Int k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(t, c) = checked_add(m(t, c), -checked_mul(k, m(s, c)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::basis_mismatch, "matrix data has wrong size");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      throw Error(ErrorCode::basis_mismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void IntMatrix::set_column(std::size_t c, std::span<const Int> values) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Int> IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_)
    throw Error(ErrorCode::basis_mismatch, "vector length does not match matrix");
  std::vector<Int> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc = checked_add(acc, checked_mul((*this)(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Int IntMatrix::max_abs() const {
  Int m = 0;
  for (Int x : data_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::basis_mismatch, "matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

IntMatrix operator*(Int k, const IntMatrix& a) {
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = checked_mul(k, a(r, c));
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::basis_mismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> __int128& { return a[r * n + c]; };
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = v / prev;
        narrow(at(i, j));
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return narrow(sign * at(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& m) {
  return hermite_normal_form(m).rows();
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols())
    throw Error(ErrorCode::basis_mismatch, "adjugate of a non-square matrix");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Int cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  Int d = determinant(m);
  if (d != 1 && d != -1) return std::nullopt;
  return d * adjugate(m);
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    // Euclid down the column until a single nonzero entry remains.
    for (;;) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r)
        if (m(r, c) != 0 &&
            (best == rows || std::llabs(m(r, c)) < std::llabs(m(best, c))))
          best = r;
      if (best == rows) break;
      swap_rows(m, pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m(r, c) == 0) continue;
        sub_row(m, r, pivot_row, m(r, c) / m(pivot_row, c));
        if (m(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(pivot_row, c) == 0) continue;
    if (m(pivot_row, c) < 0) negate_row(m, pivot_row);
    const Int p = m(pivot_row, c);
    for (std::size_t r = 0; r < pivot_row; ++r)
      sub_row(m, r, pivot_row, floor_div(m(r, c), p));
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  IntMatrix out(pivot_row, cols);
  for (std::size_t r = 0; r < pivot_row; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r, c);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  // Column-reduce a while recording the column operations in u, so that
  // a * u has its nonzero columns first.
  IntMatrix w = a;
  IntMatrix u = IntMatrix::identity(n);
  auto col_sub = [](IntMatrix& m, std::size_t t, std::size_t s, Int k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r)
      m(r, t) = checked_add(m(r, t), -checked_mul(k, m(r, s)));
  };
  auto col_swap = [](IntMatrix& m, std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, x), m(r, y));
  };
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < w.rows() && pivot_col < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = pivot_col; c < n; ++c)
        if (w(r, c) != 0 &&
            (best == n || std::llabs(w(r, c)) < std::llabs(w(r, best))))
          best = c;
      if (best == n) break;
      col_swap(w, pivot_col, best);
      col_swap(u, pivot_col, best);
      bool done = true;
      for (std::size_t c = pivot_col + 1; c < n; ++c) {
        if (w(r, c) == 0) continue;
        Int k = w(r, c) / w(r, pivot_col);
        col_sub(w, c, pivot_col, k);
        col_sub(u, c, pivot_col, k);
        if (w(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (w(r, pivot_col) != 0) ++pivot_col;
  }
  IntMatrix basis(n - pivot_col, n);
  for (std::size_t k = pivot_col; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) basis(k - pivot_col, i) = u(i, k);
  return hermite_normal_form(basis);
}

}  // namespace skyring
