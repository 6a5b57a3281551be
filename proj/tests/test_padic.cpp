#include "doctest.h"
#include "sylowkit/error.hpp"
#include "sylowkit/padic.hpp"
#include "sylowkit/sylow.hpp"

using namespace sylowkit;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Oracle: divide out p from a machine integer.
long naive_v(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("valuations") {
  CHECK(vp(Rational(0), 3).is_infinite());
  CHECK(vp(Rational(45), 3) == Valuation::finite(2));
  CHECK(vp(q(1, 2), 2) == Valuation::finite(-1));
  CHECK_THROWS_AS(vp(Rational(4), 4), NotPrime);
  CHECK_THROWS_AS(vp(Rational(0), 3).value(), PreconditionViolation);
  CHECK(Valuation::finite(3) < Valuation::infinity());
  CHECK((Valuation::finite(1) + Valuation::infinity()).is_infinite());
  CHECK(vp(Rational(0), 5).to_string() == "+inf");

  for (long n = 1; n < 2000; ++n)
    for (long p : {2L, 3L, 5L, 7L}) CHECK(vp(Integer(n), static_cast<std::uint64_t>(p)).value() == naive_v(n, p));

  Rng rng(13);
  for (int k = 0; k < 2000; ++k) {
    const auto [x, y] = random_rational_pair(rng, 3);
    if (x == 0 || y == 0) continue;
    CHECK(vp(Rational(x * y), 3) == vp(x, 3) + vp(y, 3));
    CHECK(min(vp(x, 3), vp(y, 3)) <= vp(Rational(x + y), 3));
  }
}

TEST_CASE("Gaussian primes") {
  CHECK(is_gaussian_prime(3));
  CHECK_FALSE(is_gaussian_prime(5));
  CHECK_FALSE(is_gaussian_prime(2));
  CHECK(two_squares(5) == std::make_pair<std::uint64_t, std::uint64_t>(1, 2));
  CHECK(two_squares(2) == std::make_pair<std::uint64_t, std::uint64_t>(1, 1));
  CHECK_FALSE(two_squares(7).has_value());
  // is_gaussian_prime cross-checks two_squares internally below 10^4.
  for (std::uint64_t p = 2; p < 10'000; ++p)
    if (is_prime(p)) CHECK(is_gaussian_prime(p) == (p % 4 == 3));
  CHECK_THROWS_AS(is_gaussian_prime(9), NotPrime);
  CHECK(divides(3, GaussianInt{Integer(6), Integer(-9)}));
  CHECK_FALSE(divides(3, GaussianInt{Integer(6), Integer(1)}));
}

TEST_CASE("valuation parity examples") {
  const auto r = check_valuation_parity(3, 6, 3);
  CHECK(r.valuation == Valuation::finite(2));
  CHECK(r.even);
  CHECK(r.reduction.p_squared_strips == 1);

  const auto five = check_valuation_parity(1, 2, 5);
  CHECK(five.valuation == Valuation::finite(1));
  CHECK_FALSE(five.even);

  const auto frac = check_valuation_parity(q(1, 3), q(2, 3), 3);
  CHECK(frac.valuation == Valuation::finite(-2));
  CHECK(frac.even);

  CHECK_THROWS_AS(check_valuation_parity(0, 0, 3), PreconditionViolation);
}

TEST_CASE("parity sampling") {
  Rng rng(17);
  for (std::uint64_t p : {3, 7, 11, 19}) {
    const auto c = valuation_parity_certificate(p, 2000, rng);
    CHECK(c.hypothesis_holds);
    CHECK(c.odd_count == 0);
    CHECK(c.even_count == 2000);
    CHECK_FALSE(c.sample_traces.empty());
  }
  for (std::uint64_t p : {5, 13, 17}) {
    const auto c = valuation_parity_certificate(p, 2000, rng);
    CHECK_FALSE(c.hypothesis_holds);
    CHECK(c.first_odd_witness.has_value());
    const auto [a, b] = *c.first_odd_witness;
    CHECK(vp(Rational(a * a + b * b), p).value() % 2 != 0);
  }
}
