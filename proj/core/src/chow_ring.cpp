#include "skyring/chow_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skyring/error.hpp"

namespace skyring {

ClassVector ClassVector::zero(int s) {
  ClassVector v;
  const auto n = static_cast<std::size_t>(s + 1);
  v.grades = {std::vector<Int>(1, 0), std::vector<Int>(n, 0), std::vector<Int>(n, 0),
              std::vector<Int>(1, 0)};
  return v;
}

bool ClassVector::is_zero() const { return lowest_grade() < 0; }

int ClassVector::lowest_grade() const {
  for (int g = 0; g < 4; ++g)
    for (Int x : grades[g])
      if (x != 0) return g;
  return -1;
}

bool ClassVector::is_homogeneous(int grade) const {
  for (int g = 0; g < 4; ++g)
    if (g != grade)
      for (Int x : grades[g])
        if (x != 0) return false;
  return true;
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
  for (int g = 0; g < 4; ++g) {
    if (grades[g].size() != o.grades[g].size())
      throw Error(ErrorCode::basis_mismatch, "class vectors belong to different rings");
    for (std::size_t i = 0; i < grades[g].size(); ++i)
      grades[g][i] = checked_add(grades[g][i], o.grades[g][i]);
  }
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& o) { return *this += -1 * o; }

ClassVector& ClassVector::operator*=(Int k) {
  for (auto& g : grades)
    for (Int& x : g) x = checked_mul(x, k);
  return *this;
}

ChowRing ChowRing::from_tables(std::vector<CenterKind> kinds, std::vector<Int> prod11,
                               std::vector<Int> prod12) {
  const std::size_t n = kinds.size() + 1;
  if (prod11.size() != n * n * n || prod12.size() != n * n)
    throw Error(ErrorCode::basis_mismatch, "structure-constant tables have the wrong size");
  ChowRing r;
  r.kinds_ = std::move(kinds);
  r.prod11_ = std::move(prod11);
  r.prod12_ = std::move(prod12);
  return r;
}

int ChowRing::rank(int grade) const {
  if (grade == 0 || grade == 3) return 1;
  if (grade == 1 || grade == 2) return n();
  return 0;
}

std::vector<Int> ChowRing::product11(int i, int j) const {
  std::vector<Int> out(static_cast<std::size_t>(n()));
  for (int k = 0; k < n(); ++k) out[k] = product11(i, j, k);
  return out;
}

ClassVector ChowRing::basis(int grade, int index) const {
  if (grade < 0 || grade > 3 || index < 0 || index >= rank(grade))
    throw Error(ErrorCode::index_out_of_range, "basis element out of range");
  ClassVector v = ClassVector::zero(num_centers());
  v.grades[grade][index] = 1;
  return v;
}

ClassVector ChowRing::e(int alpha) const {
  if (alpha < 1 || alpha > num_centers())
    throw Error(ErrorCode::index_out_of_range, "no exceptional class e" + std::to_string(alpha));
  return basis(1, alpha);
}

ClassVector ChowRing::q(int alpha) const {
  if (alpha < 1 || alpha > num_centers())
    throw Error(ErrorCode::index_out_of_range, "no grade-2 class for center " + std::to_string(alpha));
  return basis(2, alpha);
}

std::string ChowRing::label(int grade, int index) const {
  const std::string k = std::to_string(index);
  switch (grade) {
    case 0: return "1";
    case 1: return index == 0 ? "h" : "e" + k;
    case 2:
      if (index == 0) return "h^2";
      return kind(index) == CenterKind::point ? "e" + k + "^2" : "w" + k;
    case 3: return "h^3";
  }
  return "?";
}

void ChowRing::check_basis(const ClassVector& x) const {
  for (int g = 0; g < 4; ++g)
    if (static_cast<int>(x.grades[g].size()) != rank(g))
      throw Error(ErrorCode::basis_mismatch, "class vector is sized for a different ring");
}

ClassVector ChowRing::multiply(const ClassVector& x, const ClassVector& y) const {
  check_basis(x);
  check_basis(y);
  const int m = n();
  ClassVector out = ClassVector::zero(num_centers());
  const Int x0 = x.grades[0][0];
  const Int y0 = y.grades[0][0];
  out.grades[0][0] = checked_mul(x0, y0);
  for (int i = 0; i < m; ++i) {
    out.grades[1][i] = checked_add(checked_mul(x0, y.grades[1][i]), checked_mul(y0, x.grades[1][i]));
    out.grades[2][i] = checked_add(checked_mul(x0, y.grades[2][i]), checked_mul(y0, x.grades[2][i]));
  }
  Int top = checked_add(checked_mul(x0, y.grades[3][0]), checked_mul(y0, x.grades[3][0]));
  for (int i = 0; i < m; ++i) {
    const Int xi = x.grades[1][i];
    const Int yi = y.grades[1][i];
    for (int j = 0; j < m; ++j) {
      const Int xy = checked_mul(xi, y.grades[1][j]);
      if (xy != 0)
        for (int k = 0; k < m; ++k)
          out.grades[2][k] = checked_add(out.grades[2][k], checked_mul(xy, product11(i, j, k)));
    }
    for (int k = 0; k < m; ++k) {
      const Int p = product12(i, k);
      if (p == 0) continue;
      top = checked_add(top, checked_mul(checked_mul(xi, y.grades[2][k]), p));
      top = checked_add(top, checked_mul(checked_mul(yi, x.grades[2][k]), p));
    }
  }
  out.grades[3][0] = top;
  return out;
}

ChowRing build_ring(const std::vector<CenterIR>& irs) {
  const int s = static_cast<int>(irs.size());
  const int n = s + 1;
  std::vector<CenterKind> kinds;
  for (const auto& ir : irs) kinds.push_back(ir.kind);
  std::vector<Int> p11(static_cast<std::size_t>(n) * n * n, 0);
  std::vector<Int> p12(static_cast<std::size_t>(n) * n, 0);
  auto set11 = [&](int i, int j, int k, Int v) {
    p11[(i * n + j) * n + k] = v;
    p11[(j * n + i) * n + k] = v;
  };
  set11(0, 0, 0, 1);  // h*h = H2
  p12[0] = 1;         // h*H2 = H3
  for (int a = 1; a <= s; ++a) {
    const CenterIR& ir = irs[a - 1];
    if (ir.kind == CenterKind::point) {
      // h*e_a = 0 and e_b*e_a = 0 for b < a: nothing to set.
      set11(a, a, a, 1);
      p12[a * n + a] = 1;
      continue;
    }
    if (static_cast<int>(ir.mu.size()) != a || static_cast<int>(ir.center_class.size()) != a)
      throw Error(ErrorCode::basis_mismatch,
                  "center " + std::to_string(a) + " has intersection data for the wrong stage");
    set11(0, a, a, ir.mu[0]);
    for (int b = 1; b < a; ++b) set11(b, a, a, ir.mu[b]);
    // e_a^2 = c1 w_a - [C_a], [C_a] pulled back by index identity.
    for (int k = 0; k < a; ++k) set11(a, a, k, -ir.center_class[k]);
    set11(a, a, a, ir.c1);
    p12[a * n + a] = -1;
  }
  return ChowRing::from_tables(std::move(kinds), std::move(p11), std::move(p12));
}

ClassVector multiply(const ChowRing& r, const ClassVector& x, const ClassVector& y) {
  return r.multiply(x, y);
}

Int degree(const ChowRing& r, const ClassVector& x) {
  r.check_basis(x);
  const int g = x.lowest_grade();
  if (g >= 0 && g < 3)
    throw Error(ErrorCode::not_zero_cycle,
                "degree needs a zero-cycle, got a class with a grade-" + std::to_string(g) + " part");
  return x.grades[3][0];
}

std::array<int, 4> betti(const ChowRing& r) {
  return {r.rank(0), r.rank(1), r.rank(2), r.rank(3)};
}

IntMatrix pairing_matrix(const ChowRing& r) {
  const int n = r.rank(1);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = r.product12(i, k);
  return m;
}

ClassVector strict_transform_class(const ChowRing& r, const ProximityMatrix& prox, int i) {
  const int s = r.num_centers();
  if (i < 1 || i > s || prox.size() != s)
    throw Error(ErrorCode::index_out_of_range, "no exceptional component " + std::to_string(i));
  ClassVector v = r.e(i);
  for (int j = i + 1; j <= s; ++j)
    if (prox.at(j, i) == Proximity::proximate) v -= r.e(j);
  return v;
}

ChowRing relabel(const ChowRing& r, const std::vector<int>& order) {
  const int s = r.num_centers();
  const int n = s + 1;
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(s));
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected)
    throw Error(ErrorCode::index_out_of_range, "relabel needs a permutation of 1..s");
  std::vector<int> old(static_cast<std::size_t>(n), 0);  // new basis index -> old
  for (int k = 1; k <= s; ++k) old[k] = order[k - 1];
  std::vector<CenterKind> kinds;
  for (int k = 1; k <= s; ++k) kinds.push_back(r.kind(old[k]));
  std::vector<Int> p11(static_cast<std::size_t>(n) * n * n);
  std::vector<Int> p12(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) p11[(i * n + j) * n + k] = r.product11(old[i], old[j], old[k]);
      p12[i * n + j] = r.product12(old[i], old[j]);
    }
  return ChowRing::from_tables(std::move(kinds), std::move(p11), std::move(p12));
}

std::string format_class(const ChowRing& r, const ClassVector& x) {
  r.check_basis(x);
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < 4; ++g)
    for (int i = 0; i < r.rank(g); ++i) {
      Int c = x.grades[g][i];
      if (c == 0) continue;
      const std::string lbl = r.label(g, i);
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      const Int a = c < 0 ? -c : c;
      if (g == 0) os << a;
      else if (a == 1) os << lbl;
      else os << a << '*' << lbl;
      first = false;
    }
  if (first) os << '0';
  return os.str();
}

}  // namespace skyring
