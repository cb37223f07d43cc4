#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skyring/chow_ring.hpp"

namespace skyring {

/// Graded map A(Z) -> A(Z'). Column k of m1 (m2) is the image of the k-th
/// grade-1 (grade-2) basis element in the target's coordinates.
struct GradedHom {
  IntMatrix m1;
  IntMatrix m2;
  Int m3 = 1;

  friend bool operator==(const GradedHom&, const GradedHom&) = default;
};

ClassVector apply(const GradedHom& phi, const ChowRing& target, const ClassVector& x);

/// Inverse map when all three pieces are unimodular.
std::optional<GradedHom> inverse(const GradedHom& phi);

struct HomViolation {
  int grade_x = 1, index_x = 0;  // source basis element x
  int grade_y = 1, index_y = 0;  // source basis element y
  ClassVector image_product;     // phi(x) * phi(y)
  ClassVector product_image;     // phi(x * y)
  std::string description;
};

struct VerificationReport {
  std::vector<HomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Multiplicativity on every grade-1 x grade-1 and grade-1 x grade-2 basis
/// pair. Throws RankMismatch if the rings or matrix shapes disagree.
VerificationReport check_hom(const ChowRing& r, const ChowRing& target, const GradedHom& phi);

/// Same check, stopping at the first violation.
bool is_hom(const ChowRing& r, const ChowRing& target, const GradedHom& phi);

struct SearchConfig {
  Int bound = 3;
  bool require_unit_determinants = true;
  std::size_t limit = 0;  // 0 = no limit
  unsigned threads = 1;
  bool diagnose = false;
};

struct SearchResult {
  std::vector<GradedHom> solutions;
  Int bound = 0;
  bool exhausted = true;  // false when the limit cut enumeration short
  std::uint64_t candidates = 0;  // M1 candidates that reached the M2 solve
  // With diagnose: verified maps whose h-image is not h'. The anchored
  // search never returns these.
  std::vector<GradedHom> unanchored;
};

/// Bounded search for degree-preserving graded isomorphisms. Column 0 of M1
/// is fixed to h', the remaining columns range over [-B, B]^(s+1) in
/// lexicographic order and are pruned by the cubic intersection form; M2 is
/// solved from the products of grade-1 classes and every survivor is checked
/// with check_hom. Results come in enumeration order for any thread count.
SearchResult search_isomorphisms(const ChowRing& r, const ChowRing& target,
                                 const SearchConfig& cfg = {});

/// Map with the given grade-1 matrix, extended to grade 2 by h^2 -> phi(h)^2,
/// e_k^2 -> phi(e_k)^2 for point centers and w_k -> fiber_images[k] for curve
/// centers (target grade-2 coordinates); m3 = deg phi(h)^3. Not verified.
GradedHom hom_from_generators(const ChowRing& r, const ChowRing& target, IntMatrix m1,
                              const std::map<int, std::vector<Int>>& fiber_images);

/// The three pair configurations of exchangeable final components.
enum class SwapConfiguration { both_proximate = 1, both_t_proximate = 2, mixed = 3 };

/// Map sending e_i, e_j as prescribed by the configuration and every other
/// generator to its namesake; grade 2 follows from generator images.
GradedHom canonical_swap_hom(const ChowRing& r, const ChowRing& target, int i, int j,
                             SwapConfiguration config);

}  // namespace skyring
