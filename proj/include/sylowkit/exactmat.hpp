#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylowkit/random.hpp"

namespace sylowkit {

/// Exact rational; always kept canonical (den > 0, gcd 1, zero is 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q"; throws ParseError (bad text or q = 0).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

/// Exact 2x2 rational matrix [a b; c d], row-major.
struct Mat2 {
  Rational a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 scalar(const Rational& s) { return {s, 0, 0, s}; }

  Rational det() const { return a * d - b * c; }
  Rational trace() const { return a + d; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x);
Mat2 operator*(const Rational& s, const Mat2& x);

/// Throws SingularMatrix when det = 0.
Mat2 inverse(const Mat2& m);
/// Non-negative powers by repeated squaring; negative via inverse().
Mat2 power(const Mat2& m, long long k);

/// Literal "[a b; c d]" with rational entries.
Mat2 parse_matrix(std::string_view text);
std::string to_string(const Mat2& m);

/// Least k in [1, bound] with M^k = I. Throws NotUnimodular if det != 1.
std::optional<unsigned> matrix_order(const Mat2& m, unsigned bound);

enum class InvolutionClass { identity, central_involution };
const char* to_string(InvolutionClass c);

/// Classifies a solution of M^2 = I in SL2(Q). Throws NotUnimodular,
/// NotInvolution, or InternalInconsistency if M is neither I nor -I.
InvolutionClass involution_classify(const Mat2& m);

/// Companion matrices of x^2 - t x + 1 with finite order: orders 1, 2, 3, 4, 6.
struct FiniteOrderSample {
  Mat2 matrix;
  unsigned expected_order = 1;
};

/// Integer matrix with det 1 and entries bounded by `bound` in absolute value.
Mat2 random_unimodular_integer(Rng& rng, std::int64_t bound);
/// Random rational matrix with det 1; numerators and denominators bounded.
Mat2 random_sl2_rational(Rng& rng, std::int64_t bound);

/// Canonical finite-order elements conjugated by random unimodular integer
/// matrices (entries bounded by `bound`), cycling through orders 1,2,3,4,6.
std::vector<FiniteOrderSample> finite_order_samples(Rng& rng, std::size_t count,
                                                    std::int64_t bound = 1000);

}  // namespace sylowkit
