#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylowkit/exactmat.hpp"
#include "sylowkit/random.hpp"

namespace sylowkit {

/// p-adic valuation: an integer, or the distinguished +infinity of v_p(0).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long value) { return Valuation(value); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws PreconditionViolation on +infinity.
  long value() const;
  bool is_even() const { return !is_infinite() && *value_ % 2 == 0; }

  friend Valuation operator+(const Valuation& x, const Valuation& y);
  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend bool operator<(const Valuation& x, const Valuation& y);
  friend bool operator<=(const Valuation& x, const Valuation& y) { return !(y < x); }

  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(long v) : value_(v) {}
  std::optional<long> value_;
};

inline Valuation min(const Valuation& x, const Valuation& y) { return y < x ? y : x; }

/// Throws NotPrime.
Valuation vp(const Integer& x, std::uint64_t p);
Valuation vp(const Rational& x, std::uint64_t p);

/// x, y with x^2 + y^2 = n, 0 <= x <= y, by exhaustive search.
std::optional<std::pair<std::uint64_t, std::uint64_t>> two_squares(std::uint64_t n);

/// For a prime p: true iff p stays irreducible in Z[i], i.e. p = 3 (mod 4).
/// Below 10^4 the congruence is cross-checked against two_squares().
bool is_gaussian_prime(std::uint64_t p);

struct GaussianInt {
  Integer re, im;

  Integer norm() const { return re * re + im * im; }
  friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const GaussianInt& x, const GaussianInt& y) {
    return x.re == y.re && x.im == y.im;
  }
};

/// True iff the rational integer p divides z in Z[i].
bool divides(std::uint64_t p, const GaussianInt& z);

/// Denominator clearing and p^2 stripping performed on one input.
struct ParityReduction {
  Integer cleared_re, cleared_im;  // alpha1*beta2, beta1*alpha2
  Integer cleared_den;             // alpha2*beta2
  unsigned p_squared_strips = 0;
  Integer residual_re, residual_im;  // after stripping
  long residual_valuation = 0;       // v_p(residual_re^2 + residual_im^2)
};

struct ParityResult {
  Valuation valuation = Valuation::infinity();
  bool even = false;
  ParityReduction reduction;
};

/// v_p(alpha^2 + beta^2) computed twice: directly, and by clearing
/// denominators and stripping p^2 while p divides both Gaussian parts.
/// Throws PreconditionViolation for (0, 0), InternalInconsistency if the two
/// routes disagree, and ParityViolation if p = 3 (mod 4) and the valuation is
/// odd.
ParityResult check_valuation_parity(const Rational& alpha, const Rational& beta, std::uint64_t p);

struct ValuationParityCertificate {
  std::uint64_t p = 0;
  std::string claim;
  bool hypothesis_holds = false;  // p = 3 (mod 4)
  std::size_t samples = 0;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  std::optional<std::pair<Rational, Rational>> first_odd_witness;
  /// Reductions of the first few samples with a positive number of strips.
  std::vector<std::pair<std::pair<Rational, Rational>, ParityReduction>> sample_traces;
};

/// Random rational pair biased towards multiples of p so that the stripping
/// step is exercised.
std::pair<Rational, Rational> random_rational_pair(Rng& rng, std::uint64_t p);

ValuationParityCertificate valuation_parity_certificate(std::uint64_t p, std::size_t samples,
                                                        Rng& rng);

}  // namespace sylowkit
