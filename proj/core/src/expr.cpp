#include "skyring/expr.hpp"

#include <cctype>

#include "skyring/error.hpp"

namespace skyring {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Expr e = sum();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    throw Error(ErrorCode::syntax_error,
                what + " at position " + std::to_string(pos), pos);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  static Expr node(Expr::Kind k, std::size_t pos, std::vector<Expr> children) {
    Expr e;
    e.kind = k;
    e.position = pos;
    e.children = std::move(children);
    return e;
  }

  Expr sum() {
    Expr lhs = product();
    for (;;) {
      skip_ws();
      const std::size_t op = pos_;
      if (accept('+')) lhs = node(Expr::Kind::add, op, {std::move(lhs), product()});
      else if (accept('-')) lhs = node(Expr::Kind::sub, op, {std::move(lhs), product()});
      else return lhs;
    }
  }

  Expr product() {
    Expr lhs = unary();
    for (;;) {
      skip_ws();
      const std::size_t op = pos_;
      if (accept('*')) lhs = node(Expr::Kind::mul, op, {std::move(lhs), unary()});
      else return lhs;
    }
  }

  Expr unary() {
    skip_ws();
    const std::size_t op = pos_;
    if (accept('-')) return node(Expr::Kind::neg, op, {unary()});
    return power();
  }

  Expr power() {
    Expr base = primary();
    for (;;) {
      skip_ws();
      const std::size_t op = pos_;
      if (!accept('^')) return base;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        fail("exponent must be a non-negative integer literal");
      Expr p = node(Expr::Kind::pow, op, {std::move(base)});
      p.value = integer();
      base = std::move(p);
    }
  }

  Int integer() {
    const std::size_t start = pos_;
    Int v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      try {
        v = checked_add(checked_mul(v, 10), src_[pos_] - '0');
      } catch (const Error&) {
        fail_at(start, "integer literal too large");
      }
      ++pos_;
    }
    return v;
  }

  Expr primary() {
    skip_ws();
    if (at_end()) fail("expected an operand but input ended");
    const std::size_t start = pos_;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::literal, start, {});
      e.value = integer();
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = identifier();
      if (name == "strict") {
        expect('(');
        skip_ws();
        const std::size_t arg_pos = pos_;
        if (at_end() || !std::isalpha(static_cast<unsigned char>(src_[pos_])))
          fail("strict() takes an exceptional class e<k>");
        Expr arg = symbol(identifier(), arg_pos);
        if (arg.symbol != 'e') fail_at(arg_pos, "strict() takes an exceptional class e<k>");
        expect(')');
        Expr e = node(Expr::Kind::strict, start, {});
        e.symbol = 'e';
        e.index = arg.index;
        return e;
      }
      return symbol(name, start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  static Expr symbol(const std::string& name, std::size_t pos) {
    Expr e;
    e.kind = Expr::Kind::symbol;
    e.position = pos;
    if (name == "h") {
      e.symbol = 'h';
      return e;
    }
    const bool indexed = name.size() >= 2 && (name[0] == 'e' || name[0] == 'w') &&
                         name[1] != '0' && name.size() <= 9 &&
                         name.find_first_not_of("0123456789", 1) == std::string::npos;
    if (!indexed)
      throw Error(ErrorCode::unknown_symbol,
                  "unknown symbol '" + name + "' at position " + std::to_string(pos), pos);
    e.symbol = name[0];
    e.index = std::stoi(name.substr(1));
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul: return 2;
    case Expr::Kind::neg: return 3;
    case Expr::Kind::pow: return 4;
    default: return 5;
  }
}

std::string symbol_name(const Expr& e) {
  return e.symbol == 'h' ? "h" : std::string(1, e.symbol) + std::to_string(e.index);
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + to_string(e) + ")" : to_string(e);
}

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::literal: return std::to_string(e.value);
    case Expr::Kind::symbol: return symbol_name(e);
    case Expr::Kind::strict: return "strict(e" + std::to_string(e.index) + ")";
    case Expr::Kind::neg: return "-" + wrap(e.children[0], precedence(e.children[0]) < 3);
    case Expr::Kind::add:
    case Expr::Kind::sub: {
      const char* op = e.kind == Expr::Kind::add ? " + " : " - ";
      return wrap(e.children[0], false) + op + wrap(e.children[1], precedence(e.children[1]) <= 1);
    }
    case Expr::Kind::mul:
      return wrap(e.children[0], precedence(e.children[0]) < 2) + "*" +
             wrap(e.children[1], precedence(e.children[1]) <= 2);
    case Expr::Kind::pow:
      return wrap(e.children[0], precedence(e.children[0]) < 4) + "^" + std::to_string(e.value);
  }
  return {};
}

std::string to_tree_string(const Expr& e) {
  auto call = [&](const char* name) {
    std::string out = std::string(name) + "(";
    for (std::size_t i = 0; i < e.children.size(); ++i)
      out += (i ? "," : "") + to_tree_string(e.children[i]);
    return out;
  };
  switch (e.kind) {
    case Expr::Kind::literal: return std::to_string(e.value);
    case Expr::Kind::symbol: return symbol_name(e);
    case Expr::Kind::strict: return "Strict(e" + std::to_string(e.index) + ")";
    case Expr::Kind::neg: return call("Neg") + ")";
    case Expr::Kind::add: return call("Add") + ")";
    case Expr::Kind::sub: return call("Sub") + ")";
    case Expr::Kind::mul: return call("Mul") + ")";
    case Expr::Kind::pow: return call("Pow") + "," + std::to_string(e.value) + ")";
  }
  return {};
}

namespace {

template <class T, class Mul>
T power_by_squaring(T base, Int exponent, T one, Mul mul) {
  T result = std::move(one);
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

[[noreturn]] void unknown(const Expr& e, const std::string& why) {
  throw Error(ErrorCode::unknown_symbol,
              "unknown symbol '" + symbol_name(e) + "' at position " +
                  std::to_string(e.position) + ": " + why,
              e.position);
}

class Evaluator {
 public:
  Evaluator(const ChowRing& r, const ProximityMatrix* prox) : r_(r), prox_(prox) {}

  ClassVector eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::literal: return e.value * r_.one();
      case Expr::Kind::symbol: return symbol(e);
      case Expr::Kind::strict: {
        check_index(e);
        if (!prox_)
          throw Error(ErrorCode::validation_failed,
                      "strict() needs the sequence's proximity data", e.position);
        return strict_transform_class(r_, *prox_, e.index);
      }
      case Expr::Kind::neg: return -eval(e.children[0]);
      case Expr::Kind::add: return eval(e.children[0]) + eval(e.children[1]);
      case Expr::Kind::sub: return eval(e.children[0]) - eval(e.children[1]);
      case Expr::Kind::mul: return r_.multiply(eval(e.children[0]), eval(e.children[1]));
      case Expr::Kind::pow:
        return power_by_squaring(eval(e.children[0]), e.value, r_.one(),
                                 [&](const ClassVector& a, const ClassVector& b) {
                                   return r_.multiply(a, b);
                                 });
    }
    return r_.one();
  }

 private:
  void check_index(const Expr& e) const {
    if (e.index < 1 || e.index > r_.num_centers())
      unknown(e, "the sequence has " + std::to_string(r_.num_centers()) + " centers");
  }

  ClassVector symbol(const Expr& e) const {
    if (e.symbol == 'h') return r_.h();
    check_index(e);
    if (e.symbol == 'e') return r_.e(e.index);
    if (r_.kind(e.index) != CenterKind::curve)
      throw Error(ErrorCode::wrong_kind_symbol,
                  "w" + std::to_string(e.index) + " at position " + std::to_string(e.position) +
                      " names a fiber class but center " + std::to_string(e.index) +
                      " is a point",
                  e.position);
    return r_.q(e.index);
  }

  const ChowRing& r_;
  const ProximityMatrix* prox_;
};

}  // namespace

ClassVector evaluate(const ChowRing& r, const Expr& e, const ProximityMatrix* prox) {
  return Evaluator(r, prox).eval(e);
}

Polynomial expand(const Expr& e, const std::vector<Generator>& gens) {
  const std::size_t n = gens.size();
  switch (e.kind) {
    case Expr::Kind::literal: return Polynomial::constant(n, e.value);
    case Expr::Kind::symbol: {
      for (std::size_t i = 0; i < n; ++i)
        if (gens[i].symbol == e.symbol && gens[i].index == e.index)
          return Polynomial::variable(n, i);
      unknown(e, "not a generator of this ring");
    }
    case Expr::Kind::strict:
      throw Error(ErrorCode::unknown_symbol,
                  "strict() cannot be expanded into generators", e.position);
    case Expr::Kind::neg: return -1 * expand(e.children[0], gens);
    case Expr::Kind::add: return expand(e.children[0], gens) + expand(e.children[1], gens);
    case Expr::Kind::sub: return expand(e.children[0], gens) - expand(e.children[1], gens);
    case Expr::Kind::mul: return expand(e.children[0], gens) * expand(e.children[1], gens);
    case Expr::Kind::pow:
      return power_by_squaring(expand(e.children[0], gens), e.value,
                               Polynomial::constant(n, 1),
                               [](const Polynomial& a, const Polynomial& b) { return a * b; });
  }
  return Polynomial(n);
}

}  // namespace skyring
