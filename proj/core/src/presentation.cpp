#include "skyring/presentation.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "skyring/error.hpp"

namespace skyring {

std::string Generator::name() const {
  return symbol == 'h' ? "h" : std::string(1, symbol) + std::to_string(index);
}

std::string Generator::latex() const {
  return symbol == 'h' ? "h" : std::string(1, symbol) + "_{" + std::to_string(index) + "}";
}

std::vector<Generator> ring_generators(const ChowRing& r) {
  std::vector<Generator> gens{{'h', 0}};
  for (int a = 1; a <= r.num_centers(); ++a) {
    gens.push_back({'e', a});
    if (r.kind(a) == CenterKind::curve) gens.push_back({'w', a});
  }
  return gens;
}

Polynomial Polynomial::constant(std::size_t num_vars, Int c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t var) {
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m.at(var) = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, Int c) {
  if (m.size() != num_vars_)
    throw Error(ErrorCode::basis_mismatch, "monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_)
    throw Error(ErrorCode::basis_mismatch, "polynomials over different generator lists");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -1 * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_)
    throw Error(ErrorCode::basis_mismatch, "polynomials over different generator lists");
  Polynomial out(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, checked_mul(ca, cb));
    }
  return out;
}

Polynomial operator*(Int k, const Polynomial& a) {
  Polynomial out(a.num_vars_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, checked_mul(k, c));
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorCode::syntax_error, "negative exponent");
  Polynomial out = constant(num_vars_, 1);
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

PresentationFormat parse_format(std::string_view name) {
  if (name == "text") return PresentationFormat::text;
  if (name == "latex") return PresentationFormat::latex;
  if (name == "json") return PresentationFormat::json;
  throw Error(ErrorCode::unsupported_format, "unsupported format '" + std::string(name) +
                                                 "' (expected text, latex or json)");
}

namespace {

int weighted_degree(const std::vector<Generator>& gens, const Polynomial::Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * gens[i].weight();
  return d;
}

int latest_center(const std::vector<Generator>& gens, const Polynomial::Monomial& m) {
  int c = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) c = std::max(c, gens[i].index);
  return c;
}

std::string format_monomial(const std::vector<Generator>& gens, const Polynomial::Monomial& m,
                            bool latex) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += latex ? " \\cdot " : "*";
    out += latex ? gens[i].latex() : gens[i].name();
    if (m[i] > 1)
      out += latex ? "^{" + std::to_string(m[i]) + "}" : "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string format_polynomial(const std::vector<Generator>& gens, const Polynomial& p,
                              PresentationFormat style) {
  if (p.num_vars() != gens.size())
    throw Error(ErrorCode::basis_mismatch, "polynomial does not match the generator list");
  const bool latex = style == PresentationFormat::latex;
  std::vector<std::pair<Polynomial::Monomial, Int>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const int da = weighted_degree(gens, a.first);
    const int db = weighted_degree(gens, b.first);
    if (da != db) return da > db;
    const int ca = latest_center(gens, a.first);
    const int cb = latest_center(gens, b.first);
    if (ca != cb) return ca > cb;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const std::string mono = format_monomial(gens, m, latex);
    const Int a = c < 0 ? -c : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (mono.empty()) out += std::to_string(a);
    else if (a == 1) out += mono;
    else out += std::to_string(a) + (latex ? " " : "*") + mono;
  }
  return out.empty() ? "0" : out;
}

namespace {

class PresentationBuilder {
 public:
  PresentationBuilder(const ChowRing& r, const std::vector<CenterIR>& irs) : r_(r), irs_(irs) {
    pres_.generators = ring_generators(r);
    for (std::size_t i = 0; i < pres_.generators.size(); ++i) {
      const Generator& g = pres_.generators[i];
      if (g.symbol == 'h') h_ = i;
      else if (g.symbol == 'e') e_[g.index] = i;
      else w_[g.index] = i;
    }
  }

  Presentation build() {
    if (static_cast<int>(irs_.size()) != r_.num_centers())
      throw Error(ErrorCode::basis_mismatch, "intersection data does not match the ring");
    emit("hyperplane", 0, h().pow(4));
    for (int a = 1; a <= r_.num_centers(); ++a) {
      if (r_.kind(a) == CenterKind::point) point_families(a);
      else curve_families(a);
    }
    return std::move(pres_);
  }

 private:
  std::size_t n() const { return pres_.generators.size(); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(n(), i); }
  Polynomial h() const { return var(h_); }
  Polynomial e(int a) const { return var(e_.at(a)); }
  Polynomial w(int a) const { return var(w_.at(a)); }
  // Grade-1 basis element k (0 = h) and grade-2 basis element k (0 = h^2).
  Polynomial g1(int k) const { return k == 0 ? h() : e(k); }
  Polynomial q(int k) const {
    if (k == 0) return h().pow(2);
    return r_.kind(k) == CenterKind::point ? e(k).pow(2) : w(k);
  }
  bool is_curve(int a) const { return r_.kind(a) == CenterKind::curve; }

  void emit(std::string family, int center, Polynomial p) {
    for (const auto& rel : pres_.relations)
      if (rel.poly == p) return;
    pres_.relations.push_back({std::move(family), center, std::move(p)});
  }

  void point_families(int a) {
    emit("point_hyperplane", a, h() * e(a));
    for (int b = 1; b < a; ++b) emit("point_pair", a, e(b) * e(a));
    for (int b = 1; b < a; ++b)
      if (is_curve(b)) emit("point_fiber", a, e(a) * w(b));
    emit("point_cube", a, e(a).pow(3) - h().pow(3));
  }

  void curve_families(int a) {
    const CenterIR& ir = irs_[a - 1];
    const Polynomial ea = e(a);
    const Polynomial wa = w(a);

    // ker i*, degree-2 part: every quadratic monomial of Z_{a-1}.
    emit("curve_kernel", a, h().pow(2) * ea);
    for (int b = 1; b < a; ++b) emit("curve_kernel", a, e(b).pow(2) * ea);
    for (int b = 1; b < a; ++b) emit("curve_kernel", a, h() * e(b) * ea);
    for (int b = 1; b < a; ++b)
      for (int d = b + 1; d < a; ++d) emit("curve_kernel", a, e(b) * e(d) * ea);
    for (int b = 1; b < a; ++b)
      if (is_curve(b)) emit("curve_kernel", a, w(b) * ea);

    // ker i*, degree-1 part.
    const IntMatrix kernel = integer_kernel(IntMatrix::from_rows({ir.mu}));
    for (std::size_t row = 0; row < kernel.rows(); ++row) {
      Polynomial lin(n());
      for (int k = 0; k < a; ++k) lin += kernel(row, k) * g1(k);
      emit("curve_kernel_linear", a, lin * ea);
    }

    emit("curve_hyperplane", a, h() * ea - ir.mu[0] * wa);
    for (int b = 1; b < a; ++b) emit("curve_pair", a, e(b) * ea - ir.mu[b] * wa);
    emit("curve_fiber_square", a, wa.pow(2));
    emit("curve_hyperplane_fiber", a, h() * wa);
    for (int b = 1; b < a; ++b) emit("curve_fiber", a, e(b) * wa);
    for (int b = 1; b < a; ++b)
      if (is_curve(b)) emit("curve_fiber_pair", a, w(b) * wa);
    emit("curve_self", a, ea.pow(2) - ir.c1 * wa + center_class(ir));
    emit("curve_top", a, ea * wa + h().pow(3));
  }

  Polynomial center_class(const CenterIR& ir) const {
    if (ir.section_form) {
      const int host = ir.section_form->host;
      return ir.section_form->fiber_coefficient * w(host) - e(host).pow(2);
    }
    Polynomial c(n());
    for (std::size_t k = 0; k < ir.center_class.size(); ++k)
      c += ir.center_class[k] * q(static_cast<int>(k));
    return c;
  }

  const ChowRing& r_;
  const std::vector<CenterIR>& irs_;
  Presentation pres_;
  std::size_t h_ = 0;
  std::map<int, std::size_t> e_;
  std::map<int, std::size_t> w_;
};

}  // namespace

Presentation build_presentation(const ChowRing& r, const std::vector<CenterIR>& irs) {
  return PresentationBuilder(r, irs).build();
}

std::string emit_presentation(const Presentation& p, PresentationFormat format) {
  const auto& gens = p.generators;
  std::ostringstream os;
  switch (format) {
    case PresentationFormat::text: {
      os << "generators:";
      for (const auto& g : gens) os << ' ' << g.name();
      os << "\nrelations:\n";
      for (const auto& rel : p.relations)
        os << "  " << format_polynomial(gens, rel.poly) << "    [" << rel.family << "]\n";
      break;
    }
    case PresentationFormat::latex: {
      os << "\\mathbb{Z}\\left[";
      for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].latex();
      os << "\\right] / \\mathcal{A},\n\\mathcal{A} = \\left(";
      for (std::size_t i = 0; i < p.relations.size(); ++i)
        os << (i ? ",\n  " : "\n  ")
           << format_polynomial(gens, p.relations[i].poly, PresentationFormat::latex);
      os << "\n\\right)\n";
      break;
    }
    case PresentationFormat::json: {
      nlohmann::ordered_json doc;
      doc["generators"] = nlohmann::ordered_json::array();
      for (const auto& g : gens) doc["generators"].push_back(g.name());
      doc["relations"] = nlohmann::ordered_json::array();
      for (const auto& rel : p.relations) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [m, c] : rel.poly.terms()) {
          nlohmann::ordered_json mono = nlohmann::ordered_json::object();
          for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) mono[gens[i].name()] = m[i];
          terms.push_back({{"coefficient", c}, {"monomial", mono}});
        }
        doc["relations"].push_back({{"family", rel.family},
                                    {"center", rel.center},
                                    {"text", format_polynomial(gens, rel.poly)},
                                    {"terms", terms}});
      }
      os << doc.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

std::string emit_presentation(const ChowRing& r, const std::vector<CenterIR>& irs,
                              PresentationFormat format) {
  return emit_presentation(build_presentation(r, irs), format);
}

ClassVector evaluate_polynomial(const ChowRing& r, const std::vector<Generator>& gens,
                                const Polynomial& p) {
  if (p.num_vars() != gens.size())
    throw Error(ErrorCode::basis_mismatch, "polynomial does not match the generator list");
  std::vector<ClassVector> values;
  for (const auto& g : gens) {
    if (g.symbol == 'h') values.push_back(r.h());
    else if (g.symbol == 'e') values.push_back(r.e(g.index));
    else values.push_back(r.q(g.index));
  }
  ClassVector total = ClassVector::zero(r.num_centers());
  for (const auto& [m, c] : p.terms()) {
    ClassVector term = r.one();
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
      for (int k = 0; k < m[i] && !term.is_zero(); ++k) term = r.multiply(term, values[i]);
    total += c * term;
  }
  return total;
}

}  // namespace skyring
