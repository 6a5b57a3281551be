#include <functional>

#include "doctest.h"
#include "sylowkit/corpus.hpp"
#include "sylowkit/error.hpp"
#include "sylowkit/escalation.hpp"
#include "sylowkit/folang.hpp"
#include "sylowkit/random.hpp"

using namespace sylowkit;
using namespace sylowkit::fo;

namespace {

// Random sentence over variables v0..v{depth-1}; every quantifier is placed
// before its variable is used, so the result is closed.
Formula random_formula(Rng& rng, int depth, int bound, int max_vars) {
  auto var = [&](int k) { return "v" + std::to_string(k); };
  std::function<Term(int)> term = [&](int d) -> Term {
    const auto r = rng.uniform(0, d > 0 ? 4 : 1);
    if (r == 0 || bound == 0) return bound == 0 ? Term::identity() : Term::variable(var(static_cast<int>(rng.uniform(0, bound - 1))));
    if (r == 1) return Term::variable(var(static_cast<int>(rng.uniform(0, bound - 1))));
    if (r == 2) return Term::identity();
    if (r == 3) return Term::product(term(d - 1), term(d - 1));
    return Term::power(term(d - 1), rng.uniform(-2, 3));
  };
  const auto r = rng.uniform(0, depth > 0 ? 7 : 0);
  switch (r) {
    case 0: return rng.uniform(0, 1) ? Formula::equal(term(2), term(2)) : Formula::not_equal(term(2), term(2));
    case 1:
      if (bound < max_vars)
        return Formula::forall(var(bound), random_formula(rng, depth - 1, bound + 1, max_vars));
      [[fallthrough]];
    case 2:
      if (bound < max_vars)
        return Formula::exists(var(bound), random_formula(rng, depth - 1, bound + 1, max_vars));
      return Formula::equal(term(1), term(1));
    case 3: return Formula::conj(random_formula(rng, depth - 1, bound, max_vars), random_formula(rng, depth - 1, bound, max_vars));
    case 4: return Formula::disj(random_formula(rng, depth - 1, bound, max_vars), random_formula(rng, depth - 1, bound, max_vars));
    case 5: return Formula::negation(random_formula(rng, depth - 1, bound, max_vars));
    case 6: return Formula::implies(random_formula(rng, depth - 1, bound, max_vars), random_formula(rng, depth - 1, bound, max_vars));
    default: return Formula::iff(random_formula(rng, depth - 1, bound, max_vars), random_formula(rng, depth - 1, bound, max_vars));
  }
}

bool truth(const char* group, const std::string& text) {
  return evaluate(group_by_name(group), parse_formula(text)).truth;
}

}  // namespace

TEST_CASE("parser accepts the grammar and prints canonically") {
  const auto f = parse_formula("A x . x * x^-1 = 1");
  CHECK(f.kind() == Formula::Kind::forall);
  CHECK(f.var() == "x");
  CHECK(parse_formula(to_string(f)) == f);

  const auto d = parse_formula(*builtin_sentence_text("dichotomy"));
  CHECK(d.kind() == Formula::Kind::forall);
  CHECK(d.body().kind() == Formula::Kind::forall);
  CHECK(d.body().body().kind() == Formula::Kind::implies);
  CHECK(d.body().body().rhs().kind() == Formula::Kind::disj);
  CHECK(d.body().body().rhs().lhs().kind() == Formula::Kind::exists);
  CHECK(quantifier_depth(d) == 3);

  // parenthesised term vs parenthesised formula
  CHECK(parse_formula("A x . (x*x)^2 = 1").body().kind() == Formula::Kind::equal);
  CHECK(parse_formula("A x . (x = 1 | x != 1)").body().kind() == Formula::Kind::disj);
  // -> is right associative, <-> left associative
  const auto imp = parse_formula("A x . x = 1 -> x = 1 -> x = 1");
  CHECK(imp.body().rhs().kind() == Formula::Kind::implies);
  const auto eqv = parse_formula("A x . x = 1 <-> x = 1 <-> x = 1");
  CHECK(eqv.body().lhs().kind() == Formula::Kind::iff);
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_formula("A x ."), SyntaxError);
  CHECK_THROWS_AS(parse_formula("A x . x = "), SyntaxError);
  CHECK_THROWS_AS(parse_formula("A x . x == 1"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("A x . (x = 1"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("A X . X = 1"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("x = 1"), UnboundVariable);
  CHECK_THROWS_AS(parse_formula("A x . x = y"), UnboundVariable);
  try {
    parse_formula("A x . x ? 1");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 8);
  }
  CHECK(free_variables(Formula::equal(Term::variable("z"), Term::identity())) ==
        std::vector<std::string>{"z"});
}

TEST_CASE("comments in formula sources") {
  const auto f = parse_formula_source("# commutativity\nA x . A y . x*y = y*x  # trailing\n");
  CHECK(f == parse_formula("A x . A y . x*y = y*x"));
}

TEST_CASE("evaluation examples") {
  CHECK(truth("C5", *builtin_sentence_text("doubling")));
  CHECK(truth("C2xC2", *builtin_sentence_text("dichotomy")));
  CHECK(truth("C2xC2xC2", *builtin_sentence_text("doubling")));
  CHECK(truth("C6", "A x . A y . x*y = y*x"));

  const auto s3 = symmetric(3);
  const auto r = evaluate(s3, parse_formula("A x . A y . x*y = y*x"));
  CHECK_FALSE(r.truth);
  REQUIRE(r.counterexample.has_value());
  // least-id counterexample in lexicographic id order: x = (23), y = (12)
  CHECK(s3->element_name(r.counterexample->at(0).second) == "(23)");
  CHECK(s3->element_name(r.counterexample->at(1).second) == "(12)");

  const auto w = evaluate(s3, parse_formula("E x . x != 1 & x^3 = 1"));
  CHECK(w.truth);
  REQUIRE(w.witness.has_value());
  CHECK(s3->element_name(w.witness->at(0).second) == "(123)");
}

TEST_CASE("budget") {
  const auto g = symmetric(4);
  const auto f = parse_formula("A x . A y . A z . x*(y*z) = (x*y)*z");
  CHECK(evaluate(g, f).truth);
  CHECK_THROWS_AS(evaluate(g, f, EvalOptions{1000}), ResourceLimit);
}

TEST_CASE("doubling holds in every corpus group") {
  const auto f = parse_formula(*builtin_sentence_text("doubling"));
  for (const auto& name : corpus_names(64)) {
    CAPTURE(name);
    CHECK(evaluate(group_by_name(name), f).truth);
  }
}

TEST_CASE("dichotomy sentence agrees with the direct checker") {
  const auto f = parse_formula(*builtin_sentence_text("dichotomy"));
  for (const auto& name : corpus_names(64)) {
    CAPTURE(name);
    const auto g = group_by_name(name);
    CHECK(evaluate(g, f).truth == check_involution_dichotomy(g).failures.empty());
  }
}

TEST_CASE("cdim_le sentences agree with centralizer_dimension") {
  const auto builtins = builtin_sentences();
  CHECK(builtins.size() == 7);
  for (const auto& name : corpus_names(12)) {
    const auto g = group_by_name(name);
    const auto c = centralizer_dimension(g);
    for (unsigned k = 0; k <= 4; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto f = builtins.at("cdim_le(" + std::to_string(k) + ")");
      CHECK(quantifier_depth(f) == 2 * (k + 1));
      CHECK(evaluate(g, f).truth == (c <= k));
    }
  }
  // nonabelian: cdim_le(0) is false
  for (const char* name : {"S3", "Q8", "D8", "A4", "S4"})
    CHECK_FALSE(evaluate(group_by_name(name), builtins.at("cdim_le(0)")).truth);
}

TEST_CASE("round trip and negation normal form on random sentences") {
  Rng rng(3);
  const GroupPtr groups[] = {symmetric(3), cyclic(4), quaternion8()};
  for (int trial = 0; trial < 400; ++trial) {
    const auto f = random_formula(rng, 5, 0, 3);
    CAPTURE(to_string(f));
    CHECK(parse_formula(to_string(f)) == f);
    const auto n = negation_normal_form(f);
    for (const auto& g : groups) CHECK(evaluate(g, f).truth == evaluate(g, n).truth);
  }
}
