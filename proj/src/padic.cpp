#include "sylowkit/padic.hpp"

#include "sylowkit/error.hpp"
#include "sylowkit/sylow.hpp"

namespace sylowkit {

long Valuation::value() const {
  if (!value_) throw PreconditionViolation("valuation is +infinity");
  return *value_;
}

Valuation operator+(const Valuation& x, const Valuation& y) {
  if (x.is_infinite() || y.is_infinite()) return Valuation::infinity();
  return Valuation::finite(*x.value_ + *y.value_);
}

bool operator<(const Valuation& x, const Valuation& y) {
  if (x.is_infinite()) return false;
  if (y.is_infinite()) return true;
  return *x.value_ < *y.value_;
}

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("+inf");
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

long strip(Integer& x, std::uint64_t p) {
  Integer q(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t()));
}

}  // namespace

Valuation vp(const Integer& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  Integer t = x;
  return Valuation::finite(strip(t, p));
}

Valuation vp(const Rational& x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::infinity();
  return Valuation::finite(vp(x.get_num(), p).value() - vp(x.get_den(), p).value());
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> two_squares(std::uint64_t n) {
  for (std::uint64_t x = 0; 2 * x * x <= n; ++x) {
    const std::uint64_t rest = n - x * x;
    std::uint64_t y = 0;
    while ((y + 1) * (y + 1) <= rest) ++y;
    if (y * y == rest) return std::make_pair(x, y);
  }
  return std::nullopt;
}

bool is_gaussian_prime(std::uint64_t p) {
  require_prime(p);
  const bool by_congruence = p % 4 == 3;
  // A factorization p = (x+yi)(z+ti) into non-units forces p = x^2 + y^2.
  if (p < 10'000 && by_congruence == two_squares(p).has_value())
    throw InternalInconsistency("two-squares search disagrees with p mod 4 for p = " +
                                std::to_string(p));
  return by_congruence;
}

bool divides(std::uint64_t p, const GaussianInt& z) {
  const Integer q(static_cast<unsigned long>(p));
  return mpz_divisible_p(z.re.get_mpz_t(), q.get_mpz_t()) &&
         mpz_divisible_p(z.im.get_mpz_t(), q.get_mpz_t());
}

ParityResult check_valuation_parity(const Rational& alpha, const Rational& beta, std::uint64_t p) {
  require_prime(p);
  if (alpha == 0 && beta == 0)
    throw PreconditionViolation("valuation parity needs (alpha, beta) != (0, 0)");

  // Direct route.
  const Valuation direct = vp(Rational(alpha * alpha + beta * beta), p);

  // Reduction route: alpha^2 + beta^2 = (A^2 + B^2) / D^2 with integers.
  ParityResult result;
  ParityReduction& red = result.reduction;
  red.cleared_re = alpha.get_num() * beta.get_den();
  red.cleared_im = beta.get_num() * alpha.get_den();
  red.cleared_den = alpha.get_den() * beta.get_den();
  GaussianInt z{red.cleared_re, red.cleared_im};
  const Integer q(static_cast<unsigned long>(p));
  // p | z * conj(z); if p is a Gaussian prime it divides z itself, so both
  // parts lose a factor p and the norm loses p^2.
  while (mpz_divisible_p(Integer(z.norm()).get_mpz_t(), q.get_mpz_t()) && divides(p, z)) {
    z.re /= q;
    z.im /= q;
    ++red.p_squared_strips;
  }
  red.residual_re = z.re;
  red.residual_im = z.im;
  red.residual_valuation = vp(Integer(z.norm()), p).value();
  if (p % 4 == 3 && red.residual_valuation != 0)
    throw ParityViolation("p = " + std::to_string(p) +
                          " divides a^2 + b^2 without dividing both a and b");
  const long reduced = 2 * static_cast<long>(red.p_squared_strips) + red.residual_valuation -
                       2 * vp(red.cleared_den, p).value();
  if (direct.value() != reduced)
    throw InternalInconsistency("direct valuation " + direct.to_string() +
                                " disagrees with reduction " + std::to_string(reduced));
  result.valuation = direct;
  result.even = direct.is_even();
  if (p % 4 == 3 && !result.even)
    throw ParityViolation("odd valuation " + direct.to_string() + " for p = " + std::to_string(p));
  return result;
}

std::pair<Rational, Rational> random_rational_pair(Rng& rng, std::uint64_t p) {
  auto draw = [&] {
    Integer num(rng.uniform(-10'000, 10'000));
    Integer den(rng.uniform(1, 10'000));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(rng.uniform(0, 3)));
    if (rng.uniform(0, 1)) num *= scale; else den *= scale;
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  Rational a = draw(), b = draw();
  while (a == 0 && b == 0) b = draw();
  return {a, b};
}

ValuationParityCertificate valuation_parity_certificate(std::uint64_t p, std::size_t samples,
                                                        Rng& rng) {
  require_prime(p);
  ValuationParityCertificate cert;
  cert.p = p;
  cert.hypothesis_holds = p % 4 == 3;
  cert.claim = "v_" + std::to_string(p) + "(a^2 + b^2) is even for all rationals (a, b) != (0, 0)";
  cert.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto [a, b] = random_rational_pair(rng, p);
    const ParityResult r = check_valuation_parity(a, b, p);
    if (r.even) {
      ++cert.even_count;
    } else {
      ++cert.odd_count;
      if (!cert.first_odd_witness) cert.first_odd_witness = std::make_pair(a, b);
    }
    if (r.reduction.p_squared_strips > 0 && cert.sample_traces.size() < 3)
      cert.sample_traces.push_back({{a, b}, r.reduction});
  }
  return cert;
}

}  // namespace sylowkit
