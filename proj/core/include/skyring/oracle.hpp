#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "skyring/chow_ring.hpp"
#include "skyring/isomorphism.hpp"

namespace skyring {

struct AssociativityFailure {
  std::array<int, 3> grades;
  std::array<int, 3> indices;
  ClassVector left;   // (x*y)*z
  ClassVector right;  // x*(y*z)
  std::string description;
};

struct AssociativityReport {
  std::size_t triples = 0;
  std::vector<AssociativityFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// (x*y)*z == x*(y*z) over every triple of basis elements of every grade.
/// Throws TooLarge for s > 8.
AssociativityReport exhaustive_associativity(const ChowRing& r);

/// Integer vectors a with |a_i| <= bound and a.mu = 0, reduced to an
/// echelon generating set (rows). Throws TooLarge past ~5e7 candidates.
IntMatrix kernel_bruteforce(const std::vector<Int>& mu, Int bound);

/// Whether v lies in the lattice spanned by the rows of `basis`.
bool lattice_contains(const IntMatrix& basis, const std::vector<Int>& v);

/// Mutual membership of two row lattices of the same width.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Every unimodular M1 with entries in [-B, B], M2 from the pairing, m3 = 1,
/// kept when multiplicative. Independent of the anchored search. Throws
/// TooLarge for s > 2 or B > 3.
std::vector<GradedHom> iso_bruteforce(const ChowRing& r, const ChowRing& target, Int bound);

}  // namespace skyring
