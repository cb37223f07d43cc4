#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skyring/chow_ring.hpp"
#include "skyring/sequence.hpp"

namespace skyring {

struct Generator {
  char symbol = 'h';  // 'h', 'e' or 'w'
  int index = 0;      // 0 for h

  int weight() const { return symbol == 'w' ? 2 : 1; }
  std::string name() const;
  std::string latex() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Polynomial ring generators of A(Z_s): h, then e_a (and w_a for curves) in
/// center order.
std::vector<Generator> ring_generators(const ChowRing& r);

/// Integer polynomial over a fixed generator list; monomials are exponent
/// vectors indexed like the generator list.
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, Int c);
  static Polynomial variable(std::size_t num_vars, std::size_t var);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, Int c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Int k, const Polynomial& a);
  Polynomial pow(int exponent) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::map<Monomial, Int> terms_;
};

enum class PresentationFormat { text, latex, json };

PresentationFormat parse_format(std::string_view name);

/// Writes a polynomial with terms ordered by weighted degree (highest first),
/// then by the latest center involved, then by generator order.
std::string format_polynomial(const std::vector<Generator>& gens, const Polynomial& p,
                              PresentationFormat style = PresentationFormat::text);

struct Relation {
  std::string family;
  int center = 0;  // center the family belongs to, 0 for the ground
  Polynomial poly;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;
};

/// Generators and relation ideal of the sky, family by family in center
/// order, skipping exact repeats. The linear part of ker i* for a curve center is the Hermite basis
/// of the integer kernel of its mu-vector.
Presentation build_presentation(const ChowRing& r, const std::vector<CenterIR>& irs);

std::string emit_presentation(const Presentation& p, PresentationFormat format);
std::string emit_presentation(const ChowRing& r, const std::vector<CenterIR>& irs,
                              PresentationFormat format);

/// Substitutes ring classes for the generators and multiplies out.
ClassVector evaluate_polynomial(const ChowRing& r, const std::vector<Generator>& gens,
                                const Polynomial& p);

}  // namespace skyring
