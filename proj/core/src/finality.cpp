#include "skyring/finality.hpp"

#include <sstream>

#include "skyring/error.hpp"

namespace skyring {

ComponentGraph ComponentGraph::from_sequence(const BlowUpSequence& seq) {
  return {proximity_matrix(seq), seq.component_proximities, seq.intersections};
}

Proximity ComponentGraph::relation(int a, int b) const {
  for (const auto& rel : declared)
    if (rel.source == a && rel.target == b) return rel.kind;
  return a > b ? prox.at(a, b) : Proximity::none;
}

bool ComponentGraph::intersecting(int a, int b) const {
  if (relation(a, b) != Proximity::none || relation(b, a) != Proximity::none) return true;
  for (const auto& [x, y] : intersections)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

PairVerdict pair_finality(const ComponentGraph& g, int i, int j) {
  const int s = g.size();
  if (i < 1 || i > s || j < 1 || j > s || i == j)
    throw Error(ErrorCode::index_out_of_range,
                "pair needs two distinct components in 1.." + std::to_string(s));
  if (!g.intersecting(i, j))
    throw Error(ErrorCode::not_intersecting, "E" + std::to_string(i) + " and E" +
                                                 std::to_string(j) + " do not meet");
  PairVerdict v;
  v.i = i;
  v.j = j;
  v.forward = g.relation(i, j);
  v.backward = g.relation(j, i);
  const bool fp = v.forward == Proximity::proximate, ft = v.forward == Proximity::t_proximate;
  const bool bp = v.backward == Proximity::proximate, bt = v.backward == Proximity::t_proximate;
  if (fp && bp) v.configuration = SwapConfiguration::both_proximate;
  else if (ft && bt) v.configuration = SwapConfiguration::both_t_proximate;
  else if ((fp && bt) || (ft && bp)) v.configuration = SwapConfiguration::mixed;
  v.admissible = v.configuration == SwapConfiguration::mixed;
  return v;
}

FinalityReport finality_report(const BlowUpSequence& seq) {
  const ComponentGraph g = ComponentGraph::from_sequence(seq);
  const int s = g.size();
  FinalityReport report;
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      if (g.intersecting(i, j)) report.pairs.push_back(pair_finality(g, i, j));
  report.final_admissible.assign(static_cast<std::size_t>(s), false);
  for (int i = 1; i <= s; ++i) {
    if (i == s) {
      report.final_admissible[i - 1] = true;
      continue;
    }
    bool ok = true;
    std::optional<Proximity> role;  // E_i toward its partners, must not flip
    for (const auto& v : report.pairs) {
      if (v.i != i && v.j != i) continue;
      const Proximity mine = v.i == i ? v.forward : v.backward;
      ok = ok && v.admissible && (!role || *role == mine);
      role = mine;
    }
    report.final_admissible[i - 1] = ok;
  }
  return report;
}

std::string_view to_string(SwapConfiguration c) {
  switch (c) {
    case SwapConfiguration::both_proximate: return "proximate/proximate";
    case SwapConfiguration::both_t_proximate: return "t-proximate/t-proximate";
    case SwapConfiguration::mixed: return "t-proximate/proximate";
  }
  return "?";
}

namespace {

std::string_view phrase(Proximity p) {
  switch (p) {
    case Proximity::proximate: return "is proximate to";
    case Proximity::t_proximate: return "is t-proximate to";
    case Proximity::none: break;
  }
  return "is unrelated to";
}

}  // namespace

std::string FinalityReport::to_string() const {
  std::ostringstream os;
  os << "components:\n";
  for (std::size_t k = 0; k < final_admissible.size(); ++k)
    os << "  E" << k + 1 << ": " << (final_admissible[k] ? "can be final" : "cannot be final")
       << '\n';
  os << "intersecting pairs:\n";
  if (pairs.empty()) os << "  (none)\n";
  for (const auto& v : pairs) {
    os << "  (" << v.i << ", " << v.j << "): " << (v.admissible ? "admissible" : "forbidden")
       << "; E" << v.i << ' ' << phrase(v.forward) << " E" << v.j << ", E" << v.j << ' '
       << phrase(v.backward) << " E" << v.i;
    if (v.configuration) os << "  [" << skyring::to_string(*v.configuration) << "]";
    os << '\n';
  }
  return os.str();
}

}  // namespace skyring
