#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "sylowkit/exactmat.hpp"

namespace sylowkit {

/// Polynomial with rational coefficients in four fixed unknowns, by default
/// the entries a, b, c, d of a 2x2 matrix. Only what the symbolic
/// eliminations need: ring operations, coefficient access and substitution.
class Poly {
 public:
  using Monomial = std::array<std::uint8_t, 4>;
  using Names = std::array<const char*, 4>;
  static constexpr Names kMatrixNames = {"a", "b", "c", "d"};

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: implicit lift of scalars
  static Poly var(int index);
  static Poly monomial(const Rational& coef, Monomial m);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;
  bool is_constant() const;

  /// Replaces every occurrence of the monomial `m` (exact match) by `value`.
  Poly substitute_monomial(const Monomial& m, const Poly& value) const;
  /// Replaces the unknown `index` by `value` everywhere.
  Poly substitute_var(int index, const Poly& value) const;

  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x);
  friend Poly operator*(const Poly& x, const Poly& y);
  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

  std::string to_string(const Names& names = kMatrixNames) const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// 2x2 matrix of polynomials.
struct PolyMat2 {
  Poly a, b, c, d;

  static PolyMat2 symbolic() { return {Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3)}; }
  static PolyMat2 lift(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }
};

PolyMat2 operator*(const PolyMat2& x, const PolyMat2& y);
PolyMat2 operator+(const PolyMat2& x, const PolyMat2& y);

/// A polynomial identity lhs = rhs.
struct Equation {
  Poly lhs, rhs;

  Equation scaled(const Poly& factor) const { return {lhs * factor, rhs * factor}; }
  Poly residual() const { return lhs - rhs; }
  std::string to_string(const Poly::Names& names = Poly::kMatrixNames) const {
    return lhs.to_string(names) + " = " + rhs.to_string(names);
  }
  friend bool operator==(const Equation&, const Equation&) = default;
};

}  // namespace sylowkit
