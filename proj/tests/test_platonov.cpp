#include "doctest.h"
#include "sylowkit/error.hpp"
#include "sylowkit/padic.hpp"
#include "sylowkit/platonov.hpp"

using namespace sylowkit;
using namespace sylowkit::platonov;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

const Poly a = Poly::var(0), b = Poly::var(1), c = Poly::var(2), d = Poly::var(3);

Poly k(long n, long den = 1) { return Poly(q(n, den)); }

}  // namespace

TEST_CASE("generators") {
  const auto g3 = generator(3);
  CHECK(g3.matrix == Mat2{0, -3, q(1, 3), 0});
  CHECK(g3.order == 4);
  CHECK(g3.matrix.det() == 1);
  const auto g7 = generator(7);
  CHECK(g7.square == Mat2::scalar(-1));
  CHECK(power(g7.matrix, 4) == Mat2::identity());
  CHECK_THROWS_AS(generator(5), BadPrime);
  CHECK_THROWS_AS(generator(15), BadPrime);
  CHECK_THROWS_AS(generator(2), BadPrime);
  CHECK(primes_3_mod_4(8) == std::vector<std::uint64_t>{3, 7, 11, 19, 23, 31, 43, 47});
}

TEST_CASE("certificate for (3, 7) reproduces the conjugation equalities") {
  Rng rng;
  const auto cert = nonconjugacy_certificate(3, 7, rng);
  // b/p_i = -c p_j, d/p_i = a/p_j, -a p_i = -d p_j, -c p_i = b/p_j
  const auto& e = cert.case1.entry_equations;
  CHECK(e[0] == Equation{b * k(1, 3), c * k(-7)});
  CHECK(e[1] == Equation{d * k(1, 3), a * k(1, 7)});
  CHECK(e[2] == Equation{a * k(-3), d * k(-7)});
  CHECK(e[3] == Equation{c * k(-3), b * k(1, 7)});
  CHECK(cert.case1.multiplier_first == c * k(-3));
  CHECK(cert.case1.multiplier_third == a * k(-1, 7));
  CHECK(cert.case1.det_condition == Equation{a * d - b * c, k(1)});
  // 3(a^2 + 49 c^2) = 7
  CHECK(cert.case1.final_equation == Equation{a * a * k(3) + c * c * k(147), k(7)});
  CHECK(cert.case2.final_equation == Equation{a * a * k(3) + c * c * k(147), k(-7)});
  CHECK(cert.case2.target == Mat2{0, 7, q(-1, 7), 0});
  CHECK(cert.case1_matches_expected());
  CHECK(cert.case2_matches_expected());
  CHECK(cert.parity.v_rhs == 1);
  CHECK(cert.parity.v_coefficient == 0);
  CHECK(cert.parity.sampled_pairs == 1000);
  CHECK(cert.parity.sampled_violations == 0);
  CHECK(cert.sign.coefficients_positive);
  CHECK(cert.sign.rhs_negative);
  CHECK(cert.sign.zero_violates_det);
  CHECK(cert.sampled_conjugators == 1000);
  CHECK(cert.conjugating_samples == 0);
  CHECK(cert.refuted());
  CHECK(verify_certificate(cert).empty());
}

TEST_CASE("roles are asymmetric") {
  Rng rng;
  const auto cert = nonconjugacy_certificate(7, 3, rng, 100);
  CHECK(cert.case1.final_equation == Equation{a * a * k(7) + c * c * k(63), k(3)});
  CHECK(cert.refuted());
}

TEST_CASE("bad inputs") {
  Rng rng;
  CHECK_THROWS_AS(nonconjugacy_certificate(3, 3, rng), SamePrime);
  CHECK_THROWS_AS(nonconjugacy_certificate(3, 5, rng), BadPrime);
  CHECK_THROWS_AS(sylow_certificate(13, rng), BadPrime);
}

TEST_CASE("case-1 left side never has valuation 1 on sampled pairs") {
  // Direct oracle, independent of the certificate's own sampling.
  Rng rng(99);
  for (auto [pi, pj] : {std::pair<std::uint64_t, std::uint64_t>{3, 7}, {11, 3}, {19, 23}}) {
    for (int s = 0; s < 1000; ++s) {
      const auto [x, y] = random_rational_pair(rng, pj);
      const Rational lhs = Rational(pi) * (x * x + y * y * Rational(pj * pj));
      const auto v = vp(lhs, pj);
      CHECK(v.is_even());
      CHECK(v != Valuation::finite(1));
    }
  }
}

TEST_CASE("certificates survive serialization and catch tampering") {
  Rng rng;
  const auto cert = nonconjugacy_certificate(11, 19, rng, 200);
  const auto text = to_json(cert).dump();
  const auto back = certificate_from_json(nlohmann::json::parse(text));
  CHECK(verify_certificate(back).empty());
  CHECK(to_json(back).dump() == text);

  auto j = nlohmann::json::parse(text);
  j["case1"]["coef_c2"] = "1";
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).empty());

  j = nlohmann::json::parse(text);
  j["case1"]["final_equation"]["rhs"]["terms"][0]["coef"] = "-19";
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).empty());

  j = nlohmann::json::parse(text);
  j["case2"]["entry_equations"][2]["rhs"]["terms"][0]["coef"] = "5";
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).empty());

  j = nlohmann::json::parse(text);
  j["conjugating_samples"] = 1;
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).empty());

  j = nlohmann::json::parse(text);
  j["p_j"] = 13;
  CHECK_FALSE(verify_certificate(certificate_from_json(j)).empty());

  j = nlohmann::json::parse(text);
  j.erase("case2");
  CHECK_THROWS_AS(certificate_from_json(j), ParseError);
}

TEST_CASE("every pair of the first primes") {
  Rng rng(4);
  const auto primes = primes_3_mod_4(6);
  for (auto pi : primes)
    for (auto pj : primes) {
      if (pi == pj) continue;
      CAPTURE(pi);
      CAPTURE(pj);
      const auto cert = nonconjugacy_certificate(pi, pj, rng, 100);
      CHECK(cert.case1.coef_a2 == Rational(pi));
      CHECK(cert.case1.coef_c2 == Rational(pi * pj * pj));
      CHECK(cert.case1.rhs == Rational(pj));
      CHECK(cert.case2.rhs == -Rational(pj));
      CHECK(cert.refuted());
      CHECK(verify_certificate(cert).empty());
    }
}

TEST_CASE("Q8 does not embed") {
  Rng rng;
  const auto r = q8_embedding_refutation(rng);
  CHECK(r.a_squares_to_minus_identity);
  REQUIRE(r.solved.size() == 2);
  CHECK(r.solved.at(2) == b);   // c = b
  CHECK(r.solved.at(3) == -a);  // d = -a
  CHECK(r.b_squared.a == a * a + b * b);
  CHECK(r.b_squared.b.is_zero());
  CHECK(r.contradiction == Equation{a * a + b * b, k(-1)});
  CHECK(r.unsatisfiable);
  CHECK(r.random_checked == 1000);
  CHECK(r.shape_mismatches == 0);
  CHECK(r.passed);

  const Mat2 bm{1, 1, 1, -1};
  CHECK(bm * bm == Mat2::scalar(2));
  const Mat2 am{0, 1, -1, 0};
  CHECK(am * bm == -(bm * am));
  const Mat2 other{1, 2, 3, 4};
  CHECK_FALSE(am * other == -(other * am));
}

TEST_CASE("no element of order 8") {
  Rng rng;
  const auto r = order8_impossibility(rng);
  const Poly t = Poly::var(0);
  CHECK(r.alpha4 == t * t * t - t * k(2));
  CHECK(r.beta4 == k(1) - t * t);
  CHECK(r.trace_condition == Equation{t * t, k(2)});
  CHECK(r.v2_of_two == 1);
  CHECK(r.sampled_traces_consistent);
  CHECK(r.finite_order_samples == 1000);
  CHECK(r.order_histogram.count(8) == 0);
  CHECK(r.only_minus_identity);
  CHECK(r.passed);
  CHECK(q(3, 2) * q(3, 2) == q(9, 4));
  CHECK(q(9, 4) != 2);
}

TEST_CASE("Sylow certificate bundles") {
  for (std::uint64_t p : {3, 11}) {
    Rng rng;
    const auto c = sylow_certificate(p, rng, 200);
    CHECK(c.subgroup_order == 4);
    CHECK(c.order8.passed);
    CHECK(c.q8.passed);
    CHECK(c.passed);
    REQUIRE(!c.maximality_chain.empty());
    CHECK(c.maximality_chain.back().find("cited, not verified") != std::string::npos);
  }
}
