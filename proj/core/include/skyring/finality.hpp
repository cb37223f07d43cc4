#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skyring/isomorphism.hpp"
#include "skyring/sequence.hpp"

namespace skyring {

/// Everything finality looks at: placement-derived proximities plus the
/// relations and intersections the file declares explicitly.
struct ComponentGraph {
  ProximityMatrix prox;
  std::vector<ComponentRelation> declared;
  std::vector<std::pair<int, int>> intersections;

  static ComponentGraph from_sequence(const BlowUpSequence& seq);

  int size() const { return prox.size(); }
  /// Relation of E_a to E_b. A declared relation wins; otherwise the
  /// placement of the later center decides.
  Proximity relation(int a, int b) const;
  bool intersecting(int a, int b) const;
};

struct PairVerdict {
  int i = 0, j = 0;
  Proximity forward = Proximity::none;   // E_i relative to E_j
  Proximity backward = Proximity::none;  // E_j relative to E_i
  bool admissible = false;
  std::optional<SwapConfiguration> configuration;
};

/// E_i and E_j can both be final iff one is proximate to the other and the
/// other t-proximate back. Throws NotIntersecting for disjoint components.
PairVerdict pair_finality(const ComponentGraph& g, int i, int j);

struct FinalityReport {
  std::vector<bool> final_admissible;  // index 0 is component 1
  std::vector<PairVerdict> pairs;      // intersecting pairs, i < j
  std::string to_string() const;
};

FinalityReport finality_report(const BlowUpSequence& seq);

std::string_view to_string(SwapConfiguration c);

}  // namespace skyring
