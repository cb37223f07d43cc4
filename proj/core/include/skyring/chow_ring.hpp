#pragma once

#include <array>
#include <string>
#include <vector>

#include "skyring/int_matrix.hpp"
#include "skyring/sequence.hpp"

namespace skyring {

/// Coordinates of a (possibly mixed-grade) cycle class, one integer vector
/// per codimension 0..3.
///
/// Basis per grade: {1}; {h, e_1..e_s}; {H2, Q_1..Q_s}; {H3}, where H2 = h^2,
/// H3 = h^3, and Q_a is e_a^2 for a point center and w_a for a curve center.
struct ClassVector {
  std::array<std::vector<Int>, 4> grades;

  static ClassVector zero(int s);

  int num_centers() const { return static_cast<int>(grades[1].size()) - 1; }
  bool is_zero() const;
  /// Lowest grade with a nonzero coordinate, or -1 for the zero class.
  int lowest_grade() const;
  bool is_homogeneous(int grade) const;

  ClassVector& operator+=(const ClassVector& o);
  ClassVector& operator-=(const ClassVector& o);
  ClassVector& operator*=(Int k);
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator*(Int k, ClassVector a) { return a *= k; }
  friend ClassVector operator-(ClassVector a) { return a *= -1; }
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// A(Z_s) as a graded free Z-module with its multiplication table. All
/// products of total grade > 3 vanish, so the table is two pieces:
/// grade1 x grade1 -> grade2 and grade1 x grade2 -> grade3.
class ChowRing {
 public:
  ChowRing() = default;

  /// Assembles a ring from raw tables. `prod11` is n*n*n (i, j, k) with
  /// n = s + 1, `prod12` is n*n (i, k). Used by build_ring and by tests that
  /// need deliberately broken tables.
  static ChowRing from_tables(std::vector<CenterKind> kinds, std::vector<Int> prod11,
                              std::vector<Int> prod12);

  int num_centers() const { return static_cast<int>(kinds_.size()); }
  int rank(int grade) const;
  CenterKind kind(int alpha) const { return kinds_.at(alpha - 1); }
  const std::vector<CenterKind>& kinds() const { return kinds_; }

  /// Coefficient of the k-th grade-2 basis element in (grade-1 i) * (grade-1 j).
  Int product11(int i, int j, int k) const { return prod11_[(i * n() + j) * n() + k]; }
  /// Coefficient of H3 in (grade-1 i) * (grade-2 k).
  Int product12(int i, int k) const { return prod12_[i * n() + k]; }

  std::vector<Int> product11(int i, int j) const;

  ClassVector basis(int grade, int index) const;
  ClassVector one() const { return basis(0, 0); }
  ClassVector h() const { return basis(1, 0); }
  ClassVector e(int alpha) const;
  ClassVector q(int alpha) const;
  ClassVector h2() const { return basis(2, 0); }
  ClassVector h3() const { return basis(3, 0); }

  /// Printable basis label: "1", "h", "e2", "h^2", "e1^2", "w2", "h^3".
  std::string label(int grade, int index) const;

  ClassVector multiply(const ClassVector& x, const ClassVector& y) const;

  void check_basis(const ClassVector& x) const;

  friend bool operator==(const ChowRing&, const ChowRing&) = default;

 private:
  int n() const { return num_centers() + 1; }

  std::vector<CenterKind> kinds_;
  std::vector<Int> prod11_{1};
  std::vector<Int> prod12_{1};
};

ChowRing build_ring(const std::vector<CenterIR>& irs);

ClassVector multiply(const ChowRing& r, const ClassVector& x, const ClassVector& y);

/// Degree of a zero-cycle (coefficient of H3). Throws NotZeroCycle for input
/// with a nonzero lower-grade part.
Int degree(const ChowRing& r, const ClassVector& x);

std::array<int, 4> betti(const ChowRing& r);

/// (s+1) x (s+1) matrix of deg(x * y), x in the grade-1 basis (rows), y in
/// the grade-2 basis (columns).
IntMatrix pairing_matrix(const ChowRing& r);

/// Strict transform e_i^s = e_i^{s*} - sum over j proximate to i of e_j^{s*}.
ClassVector strict_transform_class(const ChowRing& r, const ProximityMatrix& prox, int i);

/// Same ring with the exceptional components listed in a different order:
/// new component k is old component order[k-1].
ChowRing relabel(const ChowRing& r, const std::vector<int>& order);

/// Text form of a class in basis labels, e.g. "12*w2 - 4*h^2 - e1^2".
std::string format_class(const ChowRing& r, const ClassVector& x);

}  // namespace skyring
