#include <doctest.h>

#include "skyring/error.hpp"
#include "support.hpp"

using namespace skyring;
using namespace skyring::test;

namespace {

Error parse_failure(const std::string& src) {
  try {
    parse_expr(src);
  } catch (const Error& e) {
    return e;
  }
  FAIL("accepted: " << src);
  return Error(ErrorCode::overflow, "");
}

Error eval_failure(const ChowRing& r, const std::string& src) {
  try {
    evaluate(r, parse_expr(src));
  } catch (const Error& e) {
    return e;
  }
  FAIL("accepted: " << src);
  return Error(ErrorCode::overflow, "");
}

std::string random_expr(std::mt19937_64& rng, int depth, int s) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  if (depth == 0 || pick(3) == 0) {
    switch (pick(3)) {
      case 0: return std::to_string(pick(5));
      case 1: return "h";
      default: return "e" + std::to_string(1 + pick(s));
    }
  }
  const std::string a = random_expr(rng, depth - 1, s), b = random_expr(rng, depth - 1, s);
  switch (pick(6)) {
    case 0: return a + " + " + b;
    case 1: return a + " - " + b;
    case 2: return a + "*" + b;
    case 3: return "(" + a + ")^" + std::to_string(pick(4));
    case 4: return "-(" + a + ")";
    default: return "(" + a + " - " + b + ")*" + b;
  }
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("precedence and associativity") {
    CHECK(to_tree_string(parse_expr("h^3")) == "Pow(h,3)");
    CHECK(to_tree_string(parse_expr("e1*w1 + h^3")) == "Add(Mul(e1,w1),Pow(h,3))");
    CHECK(to_tree_string(parse_expr("h - e1 - e2")) == "Sub(Sub(h,e1),e2)");
    CHECK(to_tree_string(parse_expr("-h^2")) == "Neg(Pow(h,2))");
    CHECK(to_tree_string(parse_expr("2*(h + e1)^2")) == "Mul(2,Pow(Add(h,e1),2))");
    CHECK(to_tree_string(parse_expr("strict( e3 )")) == "Strict(e3)");
  }

  TEST_CASE("syntax errors carry positions") {
    const Error e = parse_failure("e1*w2 +");
    CHECK(e.code() == ErrorCode::syntax_error);
    CHECK(e.position() == 7);
    CHECK(parse_failure("h^e1").code() == ErrorCode::syntax_error);
    CHECK(parse_failure("(h + e1").code() == ErrorCode::syntax_error);
    CHECK(parse_failure("h e1").position() == 2);
    CHECK(parse_failure("").code() == ErrorCode::syntax_error);
    CHECK(parse_failure("strict(h)").code() == ErrorCode::syntax_error);
    CHECK(parse_failure("99999999999999999999").code() == ErrorCode::syntax_error);
  }

  TEST_CASE("unknown symbols") {
    const Error e = parse_failure("h + x1");
    CHECK(e.code() == ErrorCode::unknown_symbol);
    CHECK(e.position() == 4);
    CHECK(parse_failure("e0").code() == ErrorCode::unknown_symbol);
    const ChowRing r = load_sky("ex3a.json").ring;
    CHECK(eval_failure(r, "e3").code() == ErrorCode::unknown_symbol);
    CHECK(eval_failure(r, "w1").code() == ErrorCode::wrong_kind_symbol);
  }

  TEST_CASE("evaluation in the worked examples") {
    const ChowRing ex1 = load_sky("ex1.json").ring;
    CHECK(evaluate(ex1, parse_expr("e1*w1 + h^3")).is_zero());
    CHECK(evaluate(ex1, parse_expr("h^4")).is_zero());
    const ChowRing ex2 = load_sky("ex2.json").ring;
    CHECK(evaluate(ex2, parse_expr("e1*e2 - 2*w2")).is_zero());
    CHECK(evaluate(ex2, parse_expr("h^4")).is_zero());
    CHECK(degree(ex1, evaluate(ex1, parse_expr("e1^3"))) == -14);
    CHECK(evaluate(ex1, parse_expr("3")) == 3 * ex1.one());
    CHECK(evaluate(ex1, parse_expr("h^0")) == ex1.one());
  }

  TEST_CASE("strict() uses proximity data") {
    const Sky ex1 = load_sky("ex1.json");
    const auto prox = proximity_matrix(ex1.seq);
    CHECK(evaluate(ex1.ring, parse_expr("strict(e1)"), &prox) == ex1.ring.e(1) - ex1.ring.e(2));
    CHECK_THROWS_AS(evaluate(ex1.ring, parse_expr("strict(e1)")), Error);
  }

  TEST_CASE("canonical printing round-trips") {
    CHECK(to_string(parse_expr("(h)*((e1))")) == "h*e1");
    CHECK(to_string(parse_expr("h - (e1 - e2)")) == "h - (e1 - e2)");
    CHECK(to_string(parse_expr("-(h*e1)")) == "-(h*e1)");
    CHECK(to_string(parse_expr("(-h)^2")) == "(-h)^2");
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const std::string src = random_expr(rng, 4, 3);
      const Expr once = parse_expr(src);
      const std::string printed = to_string(once);
      CAPTURE(src);
      CHECK(to_tree_string(parse_expr(printed)) == to_tree_string(once));
      CHECK(to_string(parse_expr(printed)) == printed);
    }
  }

  TEST_CASE("evaluation is multiplicative") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const Sky sky = make_sky(random_sequence(rng, 3));
      const int s = sky.ring.num_centers();
      const std::string a = random_expr(rng, 3, s), b = random_expr(rng, 3, s);
      CAPTURE(a);
      CAPTURE(b);
      const ClassVector lhs = evaluate(sky.ring, parse_expr("(" + a + ")*(" + b + ")"));
      const ClassVector rhs =
          sky.ring.multiply(evaluate(sky.ring, parse_expr(a)), evaluate(sky.ring, parse_expr(b)));
      CHECK(lhs == rhs);
      const ClassVector sum = evaluate(sky.ring, parse_expr("(" + a + ") + 2*(" + b + ")"));
      CHECK(sum == evaluate(sky.ring, parse_expr(a)) + 2 * evaluate(sky.ring, parse_expr(b)));
    }
  }
}
