#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "skyring/chow_ring.hpp"
#include "skyring/presentation.hpp"

namespace skyring {

/// Expression tree over integer literals and ring generators.
struct Expr {
  enum class Kind { literal, symbol, strict, neg, add, sub, mul, pow };

  Kind kind = Kind::literal;
  Int value = 0;     // literal value, or exponent for pow
  char symbol = 0;   // 'h', 'e', 'w' for symbol; 'e' for strict
  int index = 0;     // generator subscript (0 for h)
  std::size_t position = 0;
  std::vector<Expr> children;

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Grammar (whitespace ignored):
///   sum     := product (('+' | '-') product)*
///   product := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INT)*
///   primary := INT | 'h' | 'e'K | 'w'K | 'strict' '(' 'e'K ')' | '(' sum ')'
/// Throws Error(syntax_error) or Error(unknown_symbol) with the byte offset.
Expr parse_expr(std::string_view src);

/// Canonical text with only the parentheses the grammar needs.
std::string to_string(const Expr& e);

/// Constructor-style dump, e.g. "Add(Mul(e1,w1),Pow(h,3))".
std::string to_tree_string(const Expr& e);

/// Normal form in the ring. `prox` is needed only for strict(); without it a
/// strict() call throws.
ClassVector evaluate(const ChowRing& r, const Expr& e, const ProximityMatrix* prox = nullptr);

/// The expression as a free polynomial over `gens` (no ring relations
/// applied). strict() is not allowed here.
Polynomial expand(const Expr& e, const std::vector<Generator>& gens);

}  // namespace skyring
