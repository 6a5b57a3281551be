#include "sylowkit/polynomial.hpp"

#include <algorithm>

#include "sylowkit/error.hpp"

namespace sylowkit {

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_[Monomial{0, 0, 0, 0}] = constant;
}

Poly Poly::var(int index) {
  Monomial m{0, 0, 0, 0};
  m[static_cast<std::size_t>(index)] = 1;
  return monomial(1, m);
}

Poly Poly::monomial(const Rational& coef, Monomial m) {
  Poly p;
  p.add_term(m, coef);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[0] + m[1] + m[2] + m[3]);
  return d;
}

bool Poly::is_constant() const { return degree() == 0; }

Poly Poly::substitute_monomial(const Monomial& m, const Poly& value) const {
  Poly out;
  for (const auto& [mono, c] : terms_) {
    if (mono == m) {
      for (const auto& [vm, vc] : value.terms_) out.add_term(vm, c * vc);
    } else {
      out.add_term(mono, c);
    }
  }
  return out;
}

Poly Poly::substitute_var(int index, const Poly& value) const {
  Poly out;
  for (const auto& [mono, c] : terms_) {
    Monomial rest = mono;
    const unsigned e = rest[static_cast<std::size_t>(index)];
    rest[static_cast<std::size_t>(index)] = 0;
    Poly term = monomial(c, rest);
    for (unsigned k = 0; k < e; ++k) term = term * value;
    out = out + term;
  }
  return out;
}

Poly operator+(const Poly& x, const Poly& y) {
  Poly out = x;
  for (const auto& [m, c] : y.terms_) out.add_term(m, c);
  return out;
}

Poly operator-(const Poly& x) {
  Poly out;
  for (const auto& [m, c] : x.terms_) out.add_term(m, -c);
  return out;
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) {
      Poly::Monomial m;
      for (std::size_t k = 0; k < 4; ++k) {
        const unsigned e = unsigned{mx[k]} + my[k];
        if (e > 255) throw ResourceLimit("monomial exponent overflow");
        m[k] = static_cast<std::uint8_t>(e);
      }
      out.add_term(m, cx * cy);
    }
  return out;
}

std::string Poly::to_string(const Names& names) const {
  if (terms_.empty()) return "0";
  // Higher degree first, then lexicographic by exponent vector (descending).
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int dx = x.first[0] + x.first[1] + x.first[2] + x.first[3];
    const int dy = y.first[0] + y.first[1] + y.first[2] + y.first[3];
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    std::string mono;
    for (std::size_t k = 0; k < 4; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    std::string term;
    if (mono.empty()) term = mag.get_str();
    else if (mag == 1) term = mono;
    else term = mag.get_str() + "*" + mono;
    if (first) out += (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

PolyMat2 operator*(const PolyMat2& x, const PolyMat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

PolyMat2 operator+(const PolyMat2& x, const PolyMat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

}  // namespace sylowkit
