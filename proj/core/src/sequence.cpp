#include "skyring/sequence.hpp"

#include <cstdlib>
#include <set>
#include <type_traits>
#include <sstream>

#include "skyring/error.hpp"

namespace skyring {

std::string_view to_string(CenterKind kind) {
  return kind == CenterKind::point ? "point" : "curve";
}

std::string_view to_string(Proximity p) {
  switch (p) {
    case Proximity::none: return "none";
    case Proximity::proximate: return "proximate";
    case Proximity::t_proximate: return "t_proximate";
  }
  return "none";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::dangling_reference: return "DanglingReference";
    case ViolationKind::inadmissible_splitting: return "InadmissibleSplitting";
    case ViolationKind::inadmissible_section_class: return "InadmissibleSectionClass";
    case ViolationKind::invalid_placement: return "InvalidPlacement";
    case ViolationKind::index_mismatch: return "IndexMismatch";
  }
  return "Unknown";
}

std::string_view placement_name(const Placement& p) {
  struct Visitor {
    std::string_view operator()(const AmbientCurve&) const { return "ambient_curve"; }
    std::string_view operator()(const ExceptionalSection&) const { return "exceptional_section"; }
    std::string_view operator()(const ExceptionalPlaneCurve&) const { return "exceptional_plane_curve"; }
    std::string_view operator()(const ExceptionalFiber&) const { return "exceptional_fiber"; }
    std::string_view operator()(const AmbientPoint&) const { return "ambient_point"; }
    std::string_view operator()(const RawMu&) const { return "raw_mu"; }
  };
  return std::visit(Visitor{}, p);
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations)
    os << skyring::to_string(v.kind) << " (center " << v.center << "): " << v.message << '\n';
  return os.str();
}

bool splitting_admissible(Int degree, Int splitting) {
  return degree >= 4 && std::llabs(splitting) <= degree - 4;
}

namespace {

class Validator {
 public:
  explicit Validator(const BlowUpSequence& seq) : seq_(seq) {}

  ValidationReport run() {
    if (seq_.ground != "P3")
      add(ViolationKind::invalid_placement, 0,
          "unsupported ground '" + seq_.ground + "', only P3 is supported");
    for (int alpha = 1; alpha <= seq_.size(); ++alpha) check_center(alpha);
    check_component_relations();
    return std::move(report_);
  }

 private:
  void add(ViolationKind kind, int center, std::string message) {
    report_.violations.push_back({kind, center, std::move(message)});
  }

  // Reference to an earlier center; returns false (and records) if dangling.
  bool earlier(int alpha, int beta, std::string_view what) {
    if (beta >= 1 && beta < alpha) return true;
    std::ostringstream os;
    os << what << " references center " << beta << ", which is not earlier than " << alpha;
    add(ViolationKind::dangling_reference, alpha, os.str());
    return false;
  }

  CenterKind kind_of(int beta) const { return seq_.center(beta).kind; }

  void check_center(int alpha) {
    const CenterSpec& c = seq_.center(alpha);
    if (c.index != alpha) {
      std::ostringstream os;
      os << "declared index " << c.index << " at position " << alpha;
      add(ViolationKind::index_mismatch, alpha, os.str());
    }
    const bool is_curve = c.kind == CenterKind::curve;
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, AmbientPoint>) {
            if (is_curve) add(ViolationKind::invalid_placement, alpha, "curve center with ambient_point placement");
            for (int b : p.on) earlier(alpha, b, "ambient_point.on");
          } else if constexpr (std::is_same_v<P, RawMu>) {
            for (int b : p.contained_in) earlier(alpha, b, "raw_mu.contained_in");
            if (is_curve) {
              if (p.mu.size() != static_cast<std::size_t>(alpha))
                add(ViolationKind::invalid_placement, alpha,
                    "raw_mu.mu must have one entry for h and one per earlier center");
            } else if (!p.mu.empty() || p.c1) {
              add(ViolationKind::invalid_placement, alpha, "point center with raw_mu.mu or c1");
            }
          } else {
            if (!is_curve) {
              add(ViolationKind::invalid_placement, alpha,
                  std::string("point center with ") + std::string(placement_name(c.placement)) + " placement");
              return;
            }
            check_curve(alpha, p);
          }
        },
        c.placement);
  }

  void check_curve(int alpha, const AmbientCurve& p) {
    if (p.degree < 1) add(ViolationKind::invalid_placement, alpha, "ambient curve degree must be >= 1");
    std::set<int> seen;
    for (const Meet& m : p.meets) {
      earlier(alpha, m.index, "ambient_curve.meets");
      if (m.count < 0) add(ViolationKind::invalid_placement, alpha, "meet count must be >= 0");
      if (!seen.insert(m.index).second)
        add(ViolationKind::invalid_placement, alpha, "duplicate meet index " + std::to_string(m.index));
    }
    if (p.splitting && !splitting_admissible(p.degree, *p.splitting)) {
      std::ostringstream os;
      os << "no smooth rational curve of degree " << p.degree << " has splitting a = " << *p.splitting
         << " (requires degree >= 4 and |a| <= degree - 4)";
      add(ViolationKind::inadmissible_splitting, alpha, os.str());
    }
  }

  void check_curve(int alpha, const ExceptionalSection& p) {
    if (!earlier(alpha, p.host, "exceptional_section.host")) return;
    if (kind_of(p.host) != CenterKind::curve) {
      add(ViolationKind::invalid_placement, alpha, "exceptional_section host must be a curve center");
      return;
    }
    const auto* host = std::get_if<AmbientCurve>(&seq_.center(p.host).placement);
    if (!host || !host->splitting || !host->meets.empty()) return;
    // N = O(2g-1-|a|) + O(2g-1+|a|); a section of class s0 + b f has b = n
    // with n = (2g-1-|a|) - d, admissible iff b = 0 or b >= delta = 2|a|.
    const Int a = std::llabs(*host->splitting);
    const Int n = (2 * host->degree - 1 - a) - p.subbundle_degree;
    const Int delta = 2 * a;
    if (!(n == 0 || n >= delta)) {
      std::ostringstream os;
      os << "section with subbundle degree " << p.subbundle_degree << " gives b = " << n
         << ", need b = 0 or b >= " << delta;
      add(ViolationKind::inadmissible_section_class, alpha, os.str());
    }
  }

  void check_curve(int alpha, const ExceptionalPlaneCurve& p) {
    if (earlier(alpha, p.host, "exceptional_plane_curve.host") && kind_of(p.host) != CenterKind::point)
      add(ViolationKind::invalid_placement, alpha, "exceptional_plane_curve host must be a point center");
    if (p.plane_degree != 1 && p.plane_degree != 2)
      add(ViolationKind::invalid_placement, alpha, "plane curve degree must be 1 or 2");
  }

  void check_curve(int alpha, const ExceptionalFiber& p) {
    if (earlier(alpha, p.host, "exceptional_fiber.host") && kind_of(p.host) != CenterKind::curve)
      add(ViolationKind::invalid_placement, alpha, "exceptional_fiber host must be a curve center");
  }

  void check_component_relations() {
    const int s = seq_.size();
    auto in_range = [&](int i) { return i >= 1 && i <= s; };
    for (const auto& r : seq_.component_proximities) {
      if (!in_range(r.source) || !in_range(r.target) || r.source == r.target) {
        std::ostringstream os;
        os << "component relation " << r.source << " -> " << r.target << " is out of range";
        add(ViolationKind::dangling_reference, 0, os.str());
      }
      if (r.kind == Proximity::none)
        add(ViolationKind::invalid_placement, 0, "component relation kind must be proximate or t_proximate");
    }
    for (const auto& [i, j] : seq_.intersections) {
      if (!in_range(i) || !in_range(j) || i == j) {
        std::ostringstream os;
        os << "intersection (" << i << ", " << j << ") is out of range";
        add(ViolationKind::dangling_reference, 0, os.str());
      }
    }
  }

  const BlowUpSequence& seq_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const BlowUpSequence& seq) { return Validator(seq).run(); }

Int derived_c1(std::span<const Int> mu, std::span<const CenterKind> earlier) {
  Int c1 = checked_mul(4, mu[0]) - 2;
  for (std::size_t b = 1; b < mu.size(); ++b) {
    const Int weight = earlier[b - 1] == CenterKind::point ? 2 : 1;
    c1 = checked_add(c1, -checked_mul(weight, mu[b]));
  }
  return c1;
}

std::vector<CenterIR> lower(const BlowUpSequence& seq) {
  if (auto report = validate(seq); !report.ok())
    throw Error(ErrorCode::validation_failed, report.to_string());

  std::vector<CenterIR> irs;
  std::vector<CenterKind> kinds;
  irs.reserve(seq.centers.size());
  for (int alpha = 1; alpha <= seq.size(); ++alpha) {
    const CenterSpec& c = seq.center(alpha);
    CenterIR ir;
    ir.kind = c.kind;
    if (c.kind == CenterKind::point) {
      if (const auto* p = std::get_if<AmbientPoint>(&c.placement)) ir.contained_in = p->on;
      if (const auto* p = std::get_if<RawMu>(&c.placement)) ir.contained_in = p->contained_in;
    } else {
      ir.mu.assign(static_cast<std::size_t>(alpha), 0);
      std::optional<Int> c1_override;
      std::visit(
          [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, AmbientCurve>) {
              ir.mu[0] = p.degree;
              for (const Meet& m : p.meets) ir.mu[m.index] = m.count;
            } else if constexpr (std::is_same_v<P, ExceptionalSection>) {
              // The section maps isomorphically onto the host curve, so it
              // sees every pullback from below the host like the host does.
              const CenterIR& host = irs[p.host - 1];
              for (std::size_t b = 0; b < host.mu.size(); ++b) ir.mu[b] = host.mu[b];
              ir.mu[p.host] = p.subbundle_degree;
              ir.section_form = SectionClassForm{p.host, host.c1 - p.subbundle_degree};
            } else if constexpr (std::is_same_v<P, ExceptionalPlaneCurve>) {
              ir.mu[p.host] = -p.plane_degree;  // O_E(E) = O(-1) on P2
            } else if constexpr (std::is_same_v<P, ExceptionalFiber>) {
              ir.mu[p.host] = -1;
            } else if constexpr (std::is_same_v<P, RawMu>) {
              ir.mu = p.mu;
              ir.contained_in = p.contained_in;
              c1_override = p.c1;
            }
          },
          c.placement);
      ir.c1 = c1_override ? *c1_override : derived_c1(ir.mu, kinds);
      ir.center_class.assign(ir.mu.size(), 0);
      ir.center_class[0] = ir.mu[0];
      for (std::size_t b = 1; b < ir.mu.size(); ++b)
        ir.center_class[b] = kinds[b - 1] == CenterKind::point ? ir.mu[b] : -ir.mu[b];
    }
    kinds.push_back(c.kind);
    irs.push_back(std::move(ir));
  }
  return irs;
}

Proximity ProximityMatrix::at(int j, int i) const {
  if (j < 1 || i < 1 || j > s_ || i > s_)
    throw Error(ErrorCode::index_out_of_range, "proximity index out of range");
  return cells_[static_cast<std::size_t>(j - 1) * s_ + (i - 1)];
}

void ProximityMatrix::set(int j, int i, Proximity p) {
  if (j < 1 || i < 1 || j > s_ || i > s_)
    throw Error(ErrorCode::index_out_of_range, "proximity index out of range");
  if (p != Proximity::none && j <= i)
    throw Error(ErrorCode::index_out_of_range, "proximity only relates a later center to an earlier one");
  cells_[static_cast<std::size_t>(j - 1) * s_ + (i - 1)] = p;
}

ProximityMatrix proximity_matrix(const BlowUpSequence& seq) {
  if (auto report = validate(seq); !report.ok())
    throw Error(ErrorCode::validation_failed, report.to_string());
  ProximityMatrix prox(seq.size());
  for (int j = 1; j <= seq.size(); ++j) {
    std::visit(
        [&](const auto& p) {
          using P = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<P, AmbientCurve>) {
            for (const Meet& m : p.meets)
              if (m.count > 0) prox.set(j, m.index, Proximity::t_proximate);
          } else if constexpr (std::is_same_v<P, AmbientPoint>) {
            for (int i : p.on) prox.set(j, i, Proximity::proximate);
          } else if constexpr (std::is_same_v<P, RawMu>) {
            for (std::size_t b = 1; b < p.mu.size(); ++b)
              if (p.mu[b] != 0) prox.set(j, static_cast<int>(b), Proximity::t_proximate);
            for (int i : p.contained_in) prox.set(j, i, Proximity::proximate);
          } else {
            prox.set(j, p.host, Proximity::proximate);
          }
        },
        seq.center(j).placement);
  }
  return prox;
}

}  // namespace skyring
