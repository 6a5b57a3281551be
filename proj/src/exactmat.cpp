#include "sylowkit/exactmat.hpp"

#include <array>
#include <cctype>

#include "sylowkit/error.hpp"

namespace sylowkit {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("malformed rational '" + s + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10), q(den, 10);
  if (q == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(n, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}
Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
Mat2 operator*(const Rational& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }

Mat2 inverse(const Mat2& m) {
  const Rational det = m.det();
  if (det == 0) throw SingularMatrix("matrix " + to_string(m) + " is singular");
  return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

Mat2 power(const Mat2& m, long long k) {
  Mat2 base = k < 0 ? inverse(m) : m;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Mat2 acc = Mat2::identity();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Mat2 parse_matrix(std::string_view text) {
  std::string s(text);
  const auto open = s.find('['), close = s.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("matrix literal must look like [a b; c d]: " + s);
  const std::string body = s.substr(open + 1, close - open - 1);
  const auto semi = body.find(';');
  if (semi == std::string::npos || body.find(';', semi + 1) != std::string::npos)
    throw ParseError("matrix literal needs exactly two rows: " + s);
  auto row = [&](const std::string& r) {
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (i < r.size()) {
      while (i < r.size() && std::isspace(static_cast<unsigned char>(r[i]))) ++i;
      std::size_t j = i;
      while (j < r.size() && !std::isspace(static_cast<unsigned char>(r[j]))) ++j;
      if (j > i) parts.push_back(r.substr(i, j - i));
      i = j;
    }
    if (parts.size() != 2) throw ParseError("matrix row needs two entries: " + s);
    return std::array<Rational, 2>{parse_rational(parts[0]), parse_rational(parts[1])};
  };
  const auto top = row(body.substr(0, semi));
  const auto bottom = row(body.substr(semi + 1));
  return {top[0], top[1], bottom[0], bottom[1]};
}

std::string to_string(const Mat2& m) {
  return "[" + to_string(m.a) + " " + to_string(m.b) + "; " + to_string(m.c) + " " +
         to_string(m.d) + "]";
}

std::optional<unsigned> matrix_order(const Mat2& m, unsigned bound) {
  if (m.det() != 1) throw NotUnimodular("det of " + to_string(m) + " is " + to_string(m.det()));
  const Mat2 id = Mat2::identity();
  Mat2 acc = m;
  for (unsigned k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

const char* to_string(InvolutionClass c) {
  return c == InvolutionClass::identity ? "identity" : "central involution";
}

InvolutionClass involution_classify(const Mat2& m) {
  if (m.det() != 1) throw NotUnimodular("det of " + to_string(m) + " is " + to_string(m.det()));
  if (!(m * m == Mat2::identity())) throw NotInvolution(to_string(m) + " does not square to I");
  if (m == Mat2::identity()) return InvolutionClass::identity;
  // M^2 = I, M != ±I forces eigenvalues {1, -1} and det = -1.
  if (m == Mat2::scalar(-1)) return InvolutionClass::central_involution;
  throw InternalInconsistency("involution " + to_string(m) + " in SL2(Q) other than -I");
}

Mat2 random_unimodular_integer(Rng& rng, std::int64_t bound) {
  while (true) {
    const Integer a = rng.uniform(-bound, bound), c = rng.uniform(-bound, bound);
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    if (g != 1) continue;
    // a*s + c*t = 1, so [a -t; c s] has det 1 and |s| <= |c|, |t| <= |a|.
    Mat2 m{Rational(a), Rational(-t), Rational(c), Rational(s)};
    if (abs(s) > bound || abs(t) > bound) continue;
    return m;
  }
}

Mat2 random_sl2_rational(Rng& rng, std::int64_t bound) {
  auto draw = [&] {
    Rational r(Integer(rng.uniform(-bound, bound)), Integer(rng.uniform(1, bound)));
    r.canonicalize();
    return r;
  };
  Rational a;
  do {
    a = draw();
  } while (a == 0);
  const Rational b = draw(), c = draw();
  return {a, b, c, (1 + b * c) / a};
}

std::vector<FiniteOrderSample> finite_order_samples(Rng& rng, std::size_t count,
                                                    std::int64_t bound) {
  static const std::array<FiniteOrderSample, 5> kCanonical = {{
      {Mat2::identity(), 1},
      {Mat2::scalar(-1), 2},
      {Mat2{0, -1, 1, -1}, 3},
      {Mat2{0, 1, -1, 0}, 4},
      {Mat2{0, -1, 1, 1}, 6},
  }};
  std::vector<FiniteOrderSample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& base = kCanonical[k % kCanonical.size()];
    const Mat2 g = random_unimodular_integer(rng, bound);
    out.push_back({g * base.matrix * inverse(g), base.expected_order});
  }
  return out;
}

}  // namespace sylowkit
