#include "skyring/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "skyring/error.hpp"

namespace skyring {

AssociativityReport exhaustive_associativity(const ChowRing& r) {
  if (r.num_centers() > 8)
    throw Error(ErrorCode::too_large, "associativity sweep is limited to s <= 8");
  std::vector<std::pair<int, int>> basis;
  for (int g = 0; g < 4; ++g)
    for (int k = 0; k < r.rank(g); ++k) basis.emplace_back(g, k);
  AssociativityReport report;
  for (const auto& [gx, ix] : basis)
    for (const auto& [gy, iy] : basis)
      for (const auto& [gz, iz] : basis) {
        const ClassVector x = r.basis(gx, ix), y = r.basis(gy, iy), z = r.basis(gz, iz);
        ClassVector left = r.multiply(r.multiply(x, y), z);
        ClassVector right = r.multiply(x, r.multiply(y, z));
        ++report.triples;
        if (left == right) continue;
        AssociativityFailure f{{gx, gy, gz}, {ix, iy, iz}, std::move(left), std::move(right), {}};
        f.description = "(" + r.label(gx, ix) + "*" + r.label(gy, iy) + ")*" + r.label(gz, iz) +
                        " = " + format_class(r, f.left) + " but " + r.label(gx, ix) + "*(" +
                        r.label(gy, iy) + "*" + r.label(gz, iz) + ") = " + format_class(r, f.right);
        report.failures.push_back(std::move(f));
      }
  return report;
}

namespace {

// Echelon form by Euclidean row operations: pivot columns strictly increase,
// entries below each pivot are zero. No normalization above pivots.
std::vector<std::vector<Int>> echelon(std::vector<std::vector<Int>> rows, std::size_t width) {
  std::vector<std::vector<Int>> out;
  for (std::size_t col = 0; col < width && !rows.empty(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (best == rows.size() || std::abs(rows[i][col]) < std::abs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      bool reduced = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][col] == 0) continue;
        const Int q = rows[i][col] / rows[best][col];
        for (std::size_t c = 0; c < width; ++c)
          rows[i][c] = checked_add(rows[i][c], -checked_mul(q, rows[best][c]));
        if (rows[i][col] != 0) reduced = false;
      }
      if (reduced) {
        out.push_back(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
    std::erase_if(rows, [](const std::vector<Int>& v) {
      return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
    });
  }
  return out;
}

}  // namespace

IntMatrix kernel_bruteforce(const std::vector<Int>& mu, Int bound) {
  if (bound < 1) throw Error(ErrorCode::invalid_argument, "bound must be at least 1");
  const std::size_t n = mu.size();
  const double count = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(n));
  if (count > 5e7) throw Error(ErrorCode::too_large, "kernel enumeration space too large");
  std::vector<std::vector<Int>> hits;
  std::vector<Int> a(n, -bound);
  if (n == 0) return IntMatrix(0, 0);
  for (;;) {
    Int dot = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      dot += a[i] * mu[i];
      nonzero = nonzero || a[i] != 0;
    }
    if (dot == 0 && nonzero) hits.push_back(a);
    std::size_t pos = n;
    while (pos > 0 && a[pos - 1] == bound) a[--pos] = -bound;
    if (pos == 0) break;
    ++a[pos - 1];
  }
  const auto rows = echelon(std::move(hits), n);
  IntMatrix out(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) out(i, c) = rows[i][c];
  return out;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v) {
  if (basis.rows() > 0 && basis.cols() != v.size())
    throw Error(ErrorCode::basis_mismatch, "vector width does not match the lattice");
  const auto rows = echelon(basis.to_rows(), v.size());
  std::vector<Int> rest = v;
  for (const auto& row : rows) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (rest[p] % row[p] != 0) return false;
    const Int q = rest[p] / row[p];
    for (std::size_t c = 0; c < rest.size(); ++c)
      rest[c] = checked_add(rest[c], -checked_mul(q, row[c]));
  }
  return std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; });
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!lattice_contains(b, a.row(i))) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!lattice_contains(a, b.row(i))) return false;
  return true;
}

namespace {

// Cofactor expansion for the n <= 3 matrices the oracle enumerates.
Int small_determinant(const std::vector<Int>& a, std::size_t n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

// deg(x_i x_j x_k) for grade-1 basis elements, straight from the tables.
std::vector<Int> triple_degrees(const ChowRing& r) {
  const int n = r.rank(1);
  std::vector<Int> t(static_cast<std::size_t>(n) * n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Int sum = 0;
        for (int l = 0; l < n; ++l)
          sum = checked_add(sum, checked_mul(r.product11(i, j, l), r.product12(k, l)));
        t[(i * n + j) * n + k] = sum;
      }
  return t;
}

// Necessary for multiplicativity with m3 = 1: the triple degrees of the
// grade-1 images match the source ones.
bool preserves_triples(const std::vector<Int>& src, const std::vector<Int>& dst,
                       const std::vector<Int>& m, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        Int sum = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              sum += m[i * n + a] * m[j * n + b] * m[k * n + c] * dst[(i * n + j) * n + k];
        if (sum != src[(a * n + b) * n + c]) return false;
      }
  return true;
}

}  // namespace

std::vector<GradedHom> iso_bruteforce(const ChowRing& r, const ChowRing& target, Int bound) {
  if (r.num_centers() != target.num_centers()) return {};
  if (r.num_centers() > 2 || bound > 3)
    throw Error(ErrorCode::too_large, "brute-force isomorphism search is limited to s <= 2, B <= 3");
  if (bound < 1) throw Error(ErrorCode::invalid_argument, "bound must be at least 1");
  const std::size_t n = static_cast<std::size_t>(r.rank(1));
  const IntMatrix pairing = pairing_matrix(r);
  const auto target_pairing_inv = unimodular_inverse(pairing_matrix(target));
  if (!target_pairing_inv) return {};
  const std::vector<Int> src = triple_degrees(r), dst = triple_degrees(target);
  std::vector<GradedHom> out;
  std::vector<Int> entries(n * n, -bound);
  for (;;) {
    const Int d = small_determinant(entries, n);
    if ((d == 1 || d == -1) && preserves_triples(src, dst, entries, n)) {
      const IntMatrix m1(n, n, entries);
      const IntMatrix m1_inv_t = unimodular_inverse(m1)->transposed();
      GradedHom phi{m1, *target_pairing_inv * m1_inv_t * pairing, 1};
      if (is_hom(r, target, phi)) out.push_back(std::move(phi));
    }
    std::size_t pos = entries.size();
    while (pos > 0 && entries[pos - 1] == bound) entries[--pos] = -bound;
    if (pos == 0) break;
    ++entries[pos - 1];
  }
  return out;
}

}  // namespace skyring
