#include "doctest.h"
#include "sylowkit/error.hpp"
#include "sylowkit/exactmat.hpp"
#include "sylowkit/polynomial.hpp"

using namespace sylowkit;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational random_rational(Rng& rng) {
  Rational r(Integer(rng.uniform(-1000, 1000)), Integer(rng.uniform(1, 1000)));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rationals stay canonical and parse") {
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("6/4").get_den() == 2);
  CHECK(parse_rational("-0/5") == 0);
  CHECK(parse_rational("-0/5").get_den() == 1);
  CHECK(to_string(q(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);

  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const Rational x = random_rational(rng), y = random_rational(rng);
    CHECK((x + y) - y == x);
    if (y != 0) CHECK((x * y) / y == x);
  }
}

TEST_CASE("matrix arithmetic") {
  CHECK(Mat2::identity().det() == 1);
  const Mat2 g{0, -3, q(1, 3), 0};
  CHECK(g.det() == 1);
  CHECK(inverse(Mat2{0, 1, -1, 0}) == Mat2{0, -1, 1, 0});
  CHECK_THROWS_AS(inverse(Mat2{1, 2, 2, 4}), SingularMatrix);
  CHECK(parse_matrix("[0 -3; 1/3 0]") == g);
  CHECK(parse_matrix(to_string(g)) == g);
  CHECK_THROWS_AS(parse_matrix("[1 2 3]"), ParseError);
  CHECK(power(g, 4) == Mat2::identity());
  CHECK(power(g, -1) == inverse(g));

  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const Mat2 m = random_sl2_rational(rng, 50);
    CHECK(m.det() == 1);
    CHECK(m * inverse(m) == Mat2::identity());
    const Mat2 u = random_unimodular_integer(rng, 1000);
    CHECK(u.det() == 1);
    CHECK(u.a.get_den() == 1);
    CHECK(abs(u.a) <= 1000);
  }
}

TEST_CASE("matrix_order") {
  CHECK(matrix_order(Mat2::identity(), 12) == 1u);
  CHECK(matrix_order(Mat2{0, 1, -1, 0}, 12) == 4u);
  CHECK_FALSE(matrix_order(Mat2{1, 1, 0, 1}, 100).has_value());
  CHECK_THROWS_AS(matrix_order(Mat2{0, 1, 1, 0}, 12), NotUnimodular);

  Rng rng(21);
  const auto samples = finite_order_samples(rng, 1000);
  CHECK(samples.size() == 1000);
  for (const auto& s : samples) {
    const auto o = matrix_order(s.matrix, 12);
    REQUIRE(o.has_value());
    CHECK(*o == s.expected_order);
    CHECK(*o != 8);
    CHECK(power(s.matrix, *o) == Mat2::identity());
    for (unsigned d = 1; d < *o; ++d)
      if (*o % d == 0) CHECK_FALSE(power(s.matrix, d) == Mat2::identity());
    if (*o == 2) CHECK(involution_classify(s.matrix) == InvolutionClass::central_involution);
  }
}

TEST_CASE("involution_classify") {
  CHECK(involution_classify(Mat2::identity()) == InvolutionClass::identity);
  CHECK(involution_classify(Mat2::scalar(-1)) == InvolutionClass::central_involution);
  CHECK_THROWS_AS(involution_classify(Mat2{0, 1, 1, 0}), NotUnimodular);
  CHECK_THROWS_AS(involution_classify(Mat2{0, 1, -1, 0}), NotInvolution);
}

TEST_CASE("polynomials") {
  const Poly a = Poly::var(0), b = Poly::var(1);
  const Poly s = (a + b) * (a - b);
  CHECK(s == a * a - b * b);
  CHECK(s.degree() == 2);
  CHECK(s.to_string() == "a^2 - b^2");
  CHECK(s.substitute_var(1, Poly(Rational(2))) == a * a - Poly(Rational(4)));
  CHECK(s.substitute_monomial({2, 0, 0, 0}, Poly(Rational(1))) == Poly(Rational(1)) - b * b);
  CHECK((a - a).is_zero());
  const PolyMat2 m = PolyMat2::symbolic() * PolyMat2::lift(Mat2{0, 1, -1, 0});
  CHECK(m.a == -b);
  CHECK(m.b == a);
}
