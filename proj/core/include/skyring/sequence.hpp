#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "skyring/int_matrix.hpp"

namespace skyring {

enum class CenterKind { point, curve };

std::string_view to_string(CenterKind kind);

// Placements. Indices are 1-based positions in the sequence.

struct Meet {
  int index = 0;
  Int count = 0;
};

/// Strict transform of a smooth rational curve of the given degree in P3.
struct AmbientCurve {
  Int degree = 1;
  std::vector<Meet> meets;
  std::optional<Int> splitting;  // a in O(2g-1-a) + O(2g-1+a)
};

/// Section of the ruled exceptional divisor over a curve center, given by the
/// degree of the corresponding line subbundle of the normal bundle.
struct ExceptionalSection {
  int host = 0;
  Int subbundle_degree = 0;
};

/// Line (degree 1) or conic (degree 2) inside the P2 over a point center.
struct ExceptionalPlaneCurve {
  int host = 0;
  Int plane_degree = 1;
};

/// A fiber of the ruled exceptional divisor over a curve center.
struct ExceptionalFiber {
  int host = 0;
};

struct AmbientPoint {
  std::vector<int> on;  // earlier centers whose exceptional divisor contains it
};

/// Escape hatch: explicit intersection data. For curves `mu` has one entry
/// per earlier center plus the hyperplane entry; points only use
/// `contained_in`.
struct RawMu {
  std::vector<Int> mu;
  std::vector<int> contained_in;
  std::optional<Int> c1;
};

using Placement = std::variant<AmbientCurve, ExceptionalSection,
                               ExceptionalPlaneCurve, ExceptionalFiber,
                               AmbientPoint, RawMu>;

std::string_view placement_name(const Placement& p);

struct CenterSpec {
  int index = 0;
  CenterKind kind = CenterKind::point;
  Placement placement;
};

enum class Proximity { none, proximate, t_proximate };

std::string_view to_string(Proximity p);

/// Component-level relation "E_source is (t-)proximate to E_target" declared
/// by the user for orderings the file cannot express, e.g. the reverse
/// relation of a pair in another realizing sequence.
struct ComponentRelation {
  int source = 0;
  int target = 0;
  Proximity kind = Proximity::none;
};

struct BlowUpSequence {
  std::string ground = "P3";
  std::vector<CenterSpec> centers;
  std::vector<ComponentRelation> component_proximities;
  std::vector<std::pair<int, int>> intersections;

  int size() const { return static_cast<int>(centers.size()); }
  const CenterSpec& center(int index) const { return centers.at(index - 1); }
};

enum class ViolationKind {
  dangling_reference,
  inadmissible_splitting,
  inadmissible_section_class,
  invalid_placement,
  index_mismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int center = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const BlowUpSequence& seq);

/// Whether a smooth rational space curve of degree `degree` can have normal
/// bundle O(2d-1-a) + O(2d-1+a).
bool splitting_admissible(Int degree, Int splitting);

/// The paper-style display of a section's class: -e_host^2 + k * w_host.
struct SectionClassForm {
  int host = 0;
  Int fiber_coefficient = 0;
};

/// Lowered intersection data of one center against Z_{alpha-1}.
struct CenterIR {
  CenterKind kind = CenterKind::point;
  // Curves: mu[0] = deg i*h, mu[b] = deg i*e_b for b < alpha.
  std::vector<Int> mu;
  Int c1 = 0;
  // Grade-2 coordinates in Z_{alpha-1}: H2 first, then Q_1..Q_{alpha-1}.
  std::vector<Int> center_class;
  std::vector<int> contained_in;
  std::optional<SectionClassForm> section_form;
};

/// c1 of the normal bundle of a rational curve with the given mu-vector,
/// by adjunction against K = -4h + 2 sum_pt e + sum_curve e.
Int derived_c1(std::span<const Int> mu, std::span<const CenterKind> earlier);

/// Lowers a sequence to per-center intersection data. Throws
/// Error(validation_failed) if validate() reports anything.
std::vector<CenterIR> lower(const BlowUpSequence& seq);

/// s x s table of C_j relative to C_i, nonzero only for j > i.
class ProximityMatrix {
 public:
  ProximityMatrix() = default;
  explicit ProximityMatrix(int s)
      : s_(s), cells_(static_cast<std::size_t>(s) * s, Proximity::none) {}

  int size() const { return s_; }
  Proximity at(int j, int i) const;
  void set(int j, int i, Proximity p);

 private:
  int s_ = 0;
  std::vector<Proximity> cells_;
};

ProximityMatrix proximity_matrix(const BlowUpSequence& seq);

}  // namespace skyring
