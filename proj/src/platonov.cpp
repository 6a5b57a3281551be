#include "sylowkit/platonov.hpp"

#include "sylowkit/error.hpp"
#include "sylowkit/padic.hpp"
#include "sylowkit/sylow.hpp"

namespace sylowkit::platonov {

namespace {

using Mono = Poly::Monomial;
constexpr Mono kA2{2, 0, 0, 0};
constexpr Mono kC2{0, 0, 2, 0};
constexpr Mono kAD{1, 0, 0, 1};
constexpr Mono kBC{0, 1, 1, 0};
constexpr Mono kOne{0, 0, 0, 0};
constexpr Poly::Names kTraceNames = {"t", "u", "v", "w"};

Rational rat(std::uint64_t p) { return Rational(Integer(static_cast<unsigned long>(p))); }

void require_valid(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 3)
    throw BadPrime(std::to_string(p) + " is not a prime congruent to 3 mod 4");
}

Mat2 generator_matrix(std::uint64_t p) { return {0, -rat(p), 1 / rat(p), 0}; }

// unknown = -(r - k*unknown)/k, where k is the coefficient of `m` in r.
Poly solve_for(const Poly& residual, const Mono& m) {
  const Rational k = residual.coefficient(m);
  if (k == 0) throw InternalInconsistency("elimination: monomial absent from equation");
  const Poly rest = residual - Poly::monomial(k, m);
  return rest * Poly(Rational(-1 / k));
}

bool only_monomials(const Poly& p, std::initializer_list<Mono> allowed) {
  for (const auto& [m, c] : p.terms()) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || m == a;
    if (!ok) return false;
  }
  return true;
}

// Sum of even powers with positive coefficients: nonnegative on Q^4, zero
// only at the origin.
bool is_positive_sum_of_squares(const Poly& p) {
  if (p.is_zero()) return false;
  for (const auto& [m, c] : p.terms()) {
    if (c <= 0) return false;
    for (auto e : m)
      if (e % 2) return false;
    if (m == kOne) return false;
  }
  return true;
}

std::array<Equation, 4> entry_equations(std::uint64_t p_i, const Mat2& target) {
  const PolyMat2 g = PolyMat2::symbolic();
  const PolyMat2 left = g * PolyMat2::lift(generator_matrix(p_i));
  const PolyMat2 right = PolyMat2::lift(target) * g;
  return {{{left.a, right.a}, {left.c, right.c}, {left.b, right.b}, {left.d, right.d}}};
}

Poly eval_at_zero_ac(const Poly& p) {
  return p.substitute_var(0, Poly()).substitute_var(2, Poly());
}

}  // namespace

Generator generator(std::uint64_t p) {
  require_valid(p);
  Generator g;
  g.p = p;
  g.matrix = generator_matrix(p);
  g.square = g.matrix * g.matrix;
  if (g.matrix.det() != 1) throw InternalInconsistency("generator is not unimodular");
  if (!(g.square == Mat2::scalar(-1))) throw InternalInconsistency("generator square is not -I");
  const auto order = matrix_order(g.matrix, 12);
  if (!order || *order != 4) throw InternalInconsistency("generator does not have order 4");
  g.order = *order;
  return g;
}

CaseDerivation derive_case(std::uint64_t p_i, std::uint64_t p_j, const Mat2& target,
                           std::string target_name) {
  CaseDerivation d;
  d.target_name = std::move(target_name);
  d.target = target;
  d.entry_equations = entry_equations(p_i, target);

  const Poly a = Poly::var(0), c = Poly::var(2);
  d.multiplier_first = c * Poly(-rat(p_i));
  d.multiplier_third = a * Poly(Rational(-1 / rat(p_j)));
  d.scaled_first = d.entry_equations[0].scaled(d.multiplier_first);
  d.scaled_third = d.entry_equations[2].scaled(d.multiplier_third);

  const Poly ad = Poly::monomial(1, kAD), bc = Poly::monomial(1, kBC);
  d.ad_solved = {ad, solve_for(d.scaled_third.residual(), kAD)};
  d.bc_solved = {bc, solve_for(d.scaled_first.residual(), kBC)};
  d.det_condition = {ad - bc, Poly(1)};
  d.substituted = {d.det_condition.lhs.substitute_monomial(kAD, d.ad_solved.rhs)
                       .substitute_monomial(kBC, d.bc_solved.rhs),
                   d.det_condition.rhs};

  // Clear the 1/p_j, move constants right, make the a^2 coefficient positive.
  const Poly r = d.substituted.residual() * Poly(rat(p_j));
  const Rational constant = r.coefficient(kOne);
  Equation fin{r - Poly(constant), Poly(Rational(-constant))};
  if (fin.lhs.coefficient(kA2) < 0) fin = fin.scaled(Poly(-1));
  d.final_equation = fin;
  if (!only_monomials(fin.lhs, {kA2, kC2}) || !fin.rhs.is_constant())
    throw InternalInconsistency("elimination left unexpected terms: " + fin.to_string());
  d.coef_a2 = fin.lhs.coefficient(kA2);
  d.coef_c2 = fin.lhs.coefficient(kC2);
  d.rhs = fin.rhs.coefficient(kOne);
  return d;
}

bool NonConjugacyCertificate::case1_matches_expected() const {
  return case1.coef_a2 == rat(p_i) && case1.coef_c2 == rat(p_i) * rat(p_j) * rat(p_j) &&
         case1.rhs == rat(p_j);
}

bool NonConjugacyCertificate::case2_matches_expected() const {
  return case2.coef_a2 == rat(p_i) && case2.coef_c2 == rat(p_i) * rat(p_j) * rat(p_j) &&
         case2.rhs == -rat(p_j);
}

bool NonConjugacyCertificate::refuted() const {
  return case1_matches_expected() && case2_matches_expected() && parity.lemma_applies &&
         parity.v_rhs == 1 && parity.v_coefficient == 0 && parity.sampled_violations == 0 &&
         sign.coefficients_positive && sign.rhs_negative && sign.zero_violates_det &&
         conjugating_samples == 0;
}

NonConjugacyCertificate nonconjugacy_certificate(std::uint64_t p_i, std::uint64_t p_j, Rng& rng,
                                                 std::size_t samples) {
  require_valid(p_i);
  require_valid(p_j);
  if (p_i == p_j) throw SamePrime("primes must be distinct, got " + std::to_string(p_i) + " twice");

  NonConjugacyCertificate cert;
  cert.p_i = p_i;
  cert.p_j = p_j;
  const Mat2 gi = generator_matrix(p_i), gj = generator_matrix(p_j);
  const Mat2 gj3 = power(gj, 3);
  if (!(gj3 == -gj)) throw InternalInconsistency("g_j^3 != -g_j");
  cert.case1 = derive_case(p_i, p_j, gj, "g_j");
  cert.case2 = derive_case(p_i, p_j, gj3, "g_j^3");

  // Case 1: v_{p_j}(p_i (a^2 + (c p_j)^2)) = 0 + even, but v_{p_j}(p_j) = 1.
  ParityRefutation& par = cert.parity;
  par.prime = p_j;
  par.v_rhs = vp(cert.case1.rhs, p_j).value();
  par.v_coefficient = vp(rat(p_i), p_j).value();
  par.lemma_applies = is_gaussian_prime(p_j);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto [a, c] = random_rational_pair(rng, p_j);
    ++par.sampled_pairs;
    try {
      const ParityResult r = check_valuation_parity(a, c * rat(p_j), p_j);
      const long lhs = par.v_coefficient + r.valuation.value();
      const Rational value = rat(p_i) * (a * a + c * c * rat(p_j) * rat(p_j));
      if (vp(value, p_j).value() != lhs || lhs % 2 != 0 || lhs == par.v_rhs)
        ++par.sampled_violations;
    } catch (const ParityViolation&) {
      ++par.sampled_violations;
    }
  }

  // Case 2: positive definite left side against a negative right side; the
  // only zero of the left side, a = c = 0, makes ad - bc = 0.
  SignRefutation& sg = cert.sign;
  sg.coefficients_positive = is_positive_sum_of_squares(cert.case2.final_equation.lhs);
  sg.rhs_negative = cert.case2.rhs < 0;
  sg.zero_violates_det = eval_at_zero_ac(cert.case2.det_condition.lhs
                                             .substitute_monomial(kAD, cert.case2.ad_solved.rhs)
                                             .substitute_monomial(kBC, cert.case2.bc_solved.rhs)) !=
                         cert.case2.det_condition.rhs;

  for (std::size_t k = 0; k < samples; ++k) {
    const Mat2 g = random_sl2_rational(rng, 100);
    const Mat2 image = g * gi * inverse(g);
    ++cert.sampled_conjugators;
    if (image == gj || image == gj3) ++cert.conjugating_samples;
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

nlohmann::json poly_json(const Poly& p, const Poly::Names& names = Poly::kMatrixNames) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"coef", c.get_str()}, {"exp", {m[0], m[1], m[2], m[3]}}});
  return {{"text", p.to_string(names)}, {"terms", terms}};
}

Poly poly_from(const nlohmann::json& j) {
  Poly out;
  for (const auto& t : j.at("terms")) {
    const auto e = t.at("exp").get<std::array<int, 4>>();
    Mono m{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (e[k] < 0 || e[k] > 255) throw ParseError("bad exponent in certificate");
      m[k] = static_cast<std::uint8_t>(e[k]);
    }
    out = out + Poly::monomial(parse_rational(t.at("coef").get<std::string>()), m);
  }
  return out;
}

nlohmann::json eq_json(const Equation& e, const Poly::Names& names = Poly::kMatrixNames) {
  return {{"text", e.to_string(names)}, {"lhs", poly_json(e.lhs, names)},
          {"rhs", poly_json(e.rhs, names)}};
}

Equation eq_from(const nlohmann::json& j) { return {poly_from(j.at("lhs")), poly_from(j.at("rhs"))}; }

nlohmann::json case_json(const CaseDerivation& d) {
  nlohmann::json entries = nlohmann::json::array();
  const char* positions[] = {"(1,1)", "(2,1)", "(1,2)", "(2,2)"};
  for (std::size_t k = 0; k < 4; ++k) {
    auto e = eq_json(d.entry_equations[k]);
    e["entry"] = positions[k];
    entries.push_back(e);
  }
  return {{"target_name", d.target_name},
          {"target", to_string(d.target)},
          {"entry_equations", entries},
          {"multiplier_first", poly_json(d.multiplier_first)},
          {"multiplier_third", poly_json(d.multiplier_third)},
          {"scaled_first", eq_json(d.scaled_first)},
          {"scaled_third", eq_json(d.scaled_third)},
          {"ad_solved", eq_json(d.ad_solved)},
          {"bc_solved", eq_json(d.bc_solved)},
          {"det_condition", eq_json(d.det_condition)},
          {"substituted", eq_json(d.substituted)},
          {"final_equation", eq_json(d.final_equation)},
          {"coef_a2", d.coef_a2.get_str()},
          {"coef_c2", d.coef_c2.get_str()},
          {"rhs", d.rhs.get_str()}};
}

CaseDerivation case_from(const nlohmann::json& j) {
  CaseDerivation d;
  d.target_name = j.at("target_name").get<std::string>();
  d.target = parse_matrix(j.at("target").get<std::string>());
  const auto& entries = j.at("entry_equations");
  if (entries.size() != 4) throw ParseError("certificate needs four entry equations");
  for (std::size_t k = 0; k < 4; ++k) d.entry_equations[k] = eq_from(entries[k]);
  d.multiplier_first = poly_from(j.at("multiplier_first"));
  d.multiplier_third = poly_from(j.at("multiplier_third"));
  d.scaled_first = eq_from(j.at("scaled_first"));
  d.scaled_third = eq_from(j.at("scaled_third"));
  d.ad_solved = eq_from(j.at("ad_solved"));
  d.bc_solved = eq_from(j.at("bc_solved"));
  d.det_condition = eq_from(j.at("det_condition"));
  d.substituted = eq_from(j.at("substituted"));
  d.final_equation = eq_from(j.at("final_equation"));
  d.coef_a2 = parse_rational(j.at("coef_a2").get<std::string>());
  d.coef_c2 = parse_rational(j.at("coef_c2").get<std::string>());
  d.rhs = parse_rational(j.at("rhs").get<std::string>());
  return d;
}

}  // namespace

nlohmann::json to_json(const NonConjugacyCertificate& c) {
  return {
      {"p_i", c.p_i},
      {"p_j", c.p_j},
      {"case1", case_json(c.case1)},
      {"case2", case_json(c.case2)},
      {"parity", {{"prime", c.parity.prime}, {"v_rhs", c.parity.v_rhs},
                  {"v_coefficient", c.parity.v_coefficient},
                  {"lemma_applies", c.parity.lemma_applies},
                  {"sampled_pairs", c.parity.sampled_pairs},
                  {"sampled_violations", c.parity.sampled_violations}}},
      {"sign", {{"coefficients_positive", c.sign.coefficients_positive},
                {"rhs_negative", c.sign.rhs_negative},
                {"zero_violates_det", c.sign.zero_violates_det}}},
      {"sampled_conjugators", c.sampled_conjugators},
      {"conjugating_samples", c.conjugating_samples},
      {"refuted", c.refuted()},
  };
}

NonConjugacyCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    NonConjugacyCertificate c;
    c.p_i = j.at("p_i").get<std::uint64_t>();
    c.p_j = j.at("p_j").get<std::uint64_t>();
    c.case1 = case_from(j.at("case1"));
    c.case2 = case_from(j.at("case2"));
    const auto& par = j.at("parity");
    c.parity.prime = par.at("prime").get<std::uint64_t>();
    c.parity.v_rhs = par.at("v_rhs").get<long>();
    c.parity.v_coefficient = par.at("v_coefficient").get<long>();
    c.parity.lemma_applies = par.at("lemma_applies").get<bool>();
    c.parity.sampled_pairs = par.at("sampled_pairs").get<std::size_t>();
    c.parity.sampled_violations = par.at("sampled_violations").get<std::size_t>();
    const auto& sg = j.at("sign");
    c.sign.coefficients_positive = sg.at("coefficients_positive").get<bool>();
    c.sign.rhs_negative = sg.at("rhs_negative").get<bool>();
    c.sign.zero_violates_det = sg.at("zero_violates_det").get<bool>();
    c.sampled_conjugators = j.at("sampled_conjugators").get<std::size_t>();
    c.conjugating_samples = j.at("conjugating_samples").get<std::size_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<std::string> verify_certificate(const NonConjugacyCertificate& c) {
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  auto valid = [](std::uint64_t p) { return is_prime(p) && p % 4 == 3; };
  check(valid(c.p_i) && valid(c.p_j), "primes must be prime and 3 mod 4");
  check(c.p_i != c.p_j, "primes must be distinct");
  if (!failures.empty()) return failures;

  const Mat2 gj = generator_matrix(c.p_j);
  const Poly a = Poly::var(0), cc = Poly::var(2);
  const Poly ad = Poly::monomial(1, kAD), bc = Poly::monomial(1, kBC);
  auto check_case = [&](const CaseDerivation& d, const Mat2& target, const std::string& tag) {
    check(d.target == target, tag + ": target matrix");
    check(d.entry_equations == entry_equations(c.p_i, target), tag + ": entry equations");
    check(d.multiplier_first == cc * Poly(-rat(c.p_i)), tag + ": first multiplier");
    check(d.multiplier_third == a * Poly(Rational(-1 / rat(c.p_j))), tag + ": third multiplier");
    check(d.scaled_first == d.entry_equations[0].scaled(d.multiplier_first), tag + ": scaled first");
    check(d.scaled_third == d.entry_equations[2].scaled(d.multiplier_third), tag + ": scaled third");
    check(d.ad_solved.lhs == ad && d.ad_solved.rhs.coefficient(kAD) == 0 &&
              d.scaled_third.residual().substitute_monomial(kAD, d.ad_solved.rhs).is_zero(),
          tag + ": ad solved");
    check(d.bc_solved.lhs == bc && d.bc_solved.rhs.coefficient(kBC) == 0 &&
              d.scaled_first.residual().substitute_monomial(kBC, d.bc_solved.rhs).is_zero(),
          tag + ": bc solved");
    check(d.det_condition == Equation{ad - bc, Poly(1)}, tag + ": determinant condition");
    check(d.substituted.lhs == d.det_condition.lhs.substitute_monomial(kAD, d.ad_solved.rhs)
                                   .substitute_monomial(kBC, d.bc_solved.rhs) &&
              d.substituted.rhs == d.det_condition.rhs,
          tag + ": substitution");
    // final must be a nonzero rational multiple of the substituted equation.
    const Rational s = d.substituted.residual().coefficient(kA2);
    const Rational f = d.final_equation.residual().coefficient(kA2);
    check(s != 0 && f != 0 &&
              d.final_equation.residual() == d.substituted.residual() * Poly(Rational(f / s)),
          tag + ": final equation is a multiple of the substituted one");
    check(only_monomials(d.final_equation.lhs, {kA2, kC2}) && d.final_equation.rhs.is_constant(),
          tag + ": final equation shape");
    check(d.coef_a2 == d.final_equation.lhs.coefficient(kA2) &&
              d.coef_c2 == d.final_equation.lhs.coefficient(kC2) &&
              d.rhs == d.final_equation.rhs.coefficient(kOne),
          tag + ": recorded coefficients");
  };
  check_case(c.case1, gj, "case 1");
  check_case(c.case2, -gj, "case 2");
  check(c.case1_matches_expected(), "case 1: p_i a^2 + p_i p_j^2 c^2 = p_j");
  check(c.case2_matches_expected(), "case 2: p_i a^2 + p_i p_j^2 c^2 = -p_j");

  check(c.parity.prime == c.p_j, "parity: prime");
  check(c.parity.v_rhs == vp(c.case1.rhs, c.p_j).value() && c.parity.v_rhs % 2 != 0,
        "parity: right side valuation odd");
  check(c.parity.v_coefficient == vp(rat(c.p_i), c.p_j).value() && c.parity.v_coefficient == 0,
        "parity: coefficient valuation zero");
  check(c.parity.lemma_applies && c.p_j % 4 == 3, "parity: lemma hypothesis");
  check(c.parity.sampled_violations == 0, "parity: sampled violations");

  check(c.sign.coefficients_positive &&
            is_positive_sum_of_squares(c.case2.final_equation.lhs),
        "sign: positive left side");
  check(c.sign.rhs_negative && c.case2.rhs < 0, "sign: negative right side");
  check(c.sign.zero_violates_det && eval_at_zero_ac(c.case2.substituted.lhs) != c.case2.substituted.rhs,
        "sign: origin violates det = 1");
  check(c.conjugating_samples == 0, "sampling: a conjugator was found");
  return failures;
}

// ---------------------------------------------------------------------------
// Q8 does not embed

Q8Refutation q8_embedding_refutation(Rng& rng, std::size_t samples) {
  Q8Refutation r;
  r.a_canonical = {0, 1, -1, 0};
  r.a_squares_to_minus_identity = r.a_canonical * r.a_canonical == Mat2::scalar(-1);
  r.assumption =
      "over R every A with A^2 = -I is conjugate in GL2(R) to [0 1; -1 0]; cited, not recomputed";

  const PolyMat2 A = PolyMat2::lift(r.a_canonical), B = PolyMat2::symbolic();
  const PolyMat2 sum = A * B + B * A;
  r.anticommutation = {{{sum.a, Poly()}, {sum.b, Poly()}, {sum.c, Poly()}, {sum.d, Poly()}}};

  // Homogeneous linear system: pivot each equation on its highest unknown.
  for (const auto& eq : r.anticommutation) {
    Poly e = eq.residual();
    for (const auto& [idx, value] : r.solved) e = e.substitute_var(idx, value);
    if (e.is_zero()) continue;
    if (e.degree() != 1) throw InternalInconsistency("anticommutation system is not linear");
    int pivot = -1;
    for (int k = 3; k >= 0 && pivot < 0; --k) {
      Mono m{0, 0, 0, 0};
      m[static_cast<std::size_t>(k)] = 1;
      if (e.coefficient(m) != 0) pivot = k;
    }
    Mono pm{0, 0, 0, 0};
    pm[static_cast<std::size_t>(pivot)] = 1;
    const Poly value = solve_for(e, pm);
    for (auto& [idx, v] : r.solved) v = v.substitute_var(pivot, value);
    r.solved[pivot] = value;
  }
  PolyMat2 shape = B;
  Poly* entries[] = {&shape.a, &shape.b, &shape.c, &shape.d};
  for (const auto& [idx, value] : r.solved) *entries[idx] = value;
  r.b_shape = shape;
  r.b_squared = shape * shape;

  const bool scalar = r.b_squared.b.is_zero() && r.b_squared.c.is_zero() &&
                      r.b_squared.a == r.b_squared.d;
  r.contradiction = {r.b_squared.a, Poly(-1)};
  r.unsatisfiable = scalar && is_positive_sum_of_squares(r.contradiction.lhs) &&
                    r.contradiction.rhs.is_constant() &&
                    r.contradiction.rhs.coefficient(kOne) < 0;

  // Sampling: half unconstrained B (anticommutes iff it has the shape),
  // half shaped B (always anticommutes, never squares to -I).
  const Mat2 a = r.a_canonical;
  auto draw = [&] {
    Rational q(Integer(rng.uniform(-50, 50)), Integer(rng.uniform(1, 50)));
    q.canonicalize();
    return q;
  };
  for (std::size_t k = 0; k < samples; ++k) {
    Mat2 b;
    if (k % 2 == 0) {
      b = {draw(), draw(), draw(), draw()};
      if (k % 10 == 0) b.c = b.b;  // include near-misses with one constraint met
    } else {
      do {
        b.a = draw();
        b.b = draw();
      } while (b.a == 0 && b.b == 0);
      b.c = b.b;
      b.d = -b.a;
    }
    const bool anticommutes = a * b + b * a == Mat2::scalar(0);
    const bool shaped = b.c == b.b && b.d == -b.a;
    bool ok = anticommutes == shaped;
    if (shaped) ok = ok && b * b == Mat2::scalar(b.a * b.a + b.b * b.b) && !(b * b == Mat2::scalar(-1));
    ++r.random_checked;
    if (!ok) ++r.shape_mismatches;
  }
  r.passed = r.a_squares_to_minus_identity && r.unsatisfiable && r.shape_mismatches == 0;
  return r;
}

// ---------------------------------------------------------------------------
// No element of order 8

Order8Refutation order8_impossibility(Rng& rng, std::size_t samples) {
  Order8Refutation r;
  // Cayley-Hamilton: M^2 = tM - I, so M^(k+1) = (t alpha_k + beta_k) M - alpha_k I.
  const Poly t = Poly::var(0);
  Poly alpha = Poly(1), beta;
  for (int k = 1; k < 4; ++k) {
    const Poly next_alpha = t * alpha + beta;
    beta = -alpha;
    alpha = next_alpha;
  }
  r.alpha4 = alpha;
  r.beta4 = beta;
  // M of order 8 is not scalar, and M^4 is an involution, hence -I: so
  // alpha4 = 0 and beta4 = -1, i.e. t^2 = 2.
  const Poly cond = r.beta4 + Poly(1);  // must vanish
  const Rational k = cond.coefficient({2, 0, 0, 0});
  r.trace_condition = {Poly::monomial(1, {2, 0, 0, 0}),
                       Poly(Rational(-cond.coefficient(kOne) / k))};
  const Poly t2m2 = t * t - Poly(2);
  const bool consistent = r.alpha4 == t * t2m2 && cond * Poly(Rational(1 / k)) == t2m2 &&
                          r.trace_condition.rhs == Poly(2);
  r.v2_of_two = vp(Rational(2), 2).value();

  bool traces_ok = consistent && r.v2_of_two % 2 != 0;
  std::vector<Rational> traces = {Rational(3, 2)};
  for (std::size_t s = 1; s < samples; ++s) {
    Rational q(Integer(rng.uniform(-1000, 1000)), Integer(rng.uniform(1, 1000)));
    q.canonicalize();
    traces.push_back(q);
  }
  for (const auto& tr : traces) {
    const Rational sq = tr * tr;
    ++r.sampled_traces;
    if (sq == 2) traces_ok = false;
    if (tr != 0) {
      const long v = vp(sq, 2).value();
      if (v != 2 * vp(tr, 2).value() || v % 2 != 0 || v == r.v2_of_two) traces_ok = false;
    }
  }
  r.sampled_traces_consistent = traces_ok;

  bool only_minus = true;
  bool orders_ok = true;
  for (const auto& s : finite_order_samples(rng, samples)) {
    ++r.finite_order_samples;
    const auto order = matrix_order(s.matrix, 12);
    const unsigned o = order ? *order : 0;
    ++r.order_histogram[o];
    if (o != s.expected_order || o == 8) orders_ok = false;
    if (o == 2) {
      ++r.involutions_classified;
      if (involution_classify(s.matrix) != InvolutionClass::central_involution) only_minus = false;
    }
  }
  r.only_minus_identity = only_minus && r.involutions_classified > 0;
  r.passed = r.sampled_traces_consistent && orders_ok && r.only_minus_identity &&
             r.order_histogram.count(8) == 0;
  return r;
}

SylowCertificate sylow_certificate(std::uint64_t p, Rng& rng, std::size_t samples) {
  SylowCertificate c;
  c.generator = generator(p);
  Mat2 x = Mat2::identity();
  std::vector<Mat2> elements;
  do {
    elements.push_back(x);
    x = x * c.generator.matrix;
  } while (!(x == Mat2::identity()) && elements.size() < 16);
  c.subgroup_order = elements.size();
  c.order8 = order8_impossibility(rng, samples);
  c.q8 = q8_embedding_refutation(rng, samples);
  const std::string n = std::to_string(c.subgroup_order);
  c.maximality_chain = {
      "order: <g_p> has order " + n + " [verified]",
      "involution: -I is the only involution of SL2(Q) [verified symbolically; sampled]",
      "no-order-8: SL2(Q) has no element of order 8 [verified: t^2 = 2 has no rational root]",
      "no-subgroup-8: SL2(Q) has no subgroup of order 8: a cyclic one would need an element "
      "of order 8, the others are Q8 (refuted) or contain two involutions [verified]",
      "finiteness: 2-subgroups of SL2(Q) are finite: periodic linear groups are locally "
      "finite (Schur) [cited, not verified]",
      "conclusion: a 2-subgroup strictly containing <g_p> would be finite of order >= 8 and "
      "would contain a subgroup of order 8, so <g_p> is a Sylow 2-subgroup [cited, not "
      "verified]",
  };
  c.passed = c.subgroup_order == 4 && c.order8.passed && c.q8.passed;
  return c;
}

std::vector<std::uint64_t> primes_3_mod_4(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; out.size() < count; n += 4)
    if (is_prime(n)) out.push_back(n);
  return out;
}

nlohmann::json to_json(const Generator& g) {
  return {{"p", g.p},
          {"matrix", to_string(g.matrix)},
          {"det", to_string(g.matrix.det())},
          {"square", to_string(g.square)},
          {"order", g.order}};
}

nlohmann::json to_json(const Q8Refutation& r) {
  nlohmann::json anti = nlohmann::json::array();
  for (const auto& e : r.anticommutation) anti.push_back(e.to_string());
  nlohmann::json solved = nlohmann::json::object();
  for (const auto& [idx, v] : r.solved) solved[Poly::kMatrixNames[static_cast<std::size_t>(idx)]] = v.to_string();
  auto mat = [](const PolyMat2& m) {
    return "[" + m.a.to_string() + ", " + m.b.to_string() + "; " + m.c.to_string() + ", " +
           m.d.to_string() + "]";
  };
  return {{"a_canonical", to_string(r.a_canonical)},
          {"a_squares_to_minus_identity", r.a_squares_to_minus_identity},
          {"assumption", r.assumption},
          {"anticommutation", anti},
          {"solved", solved},
          {"b_shape", mat(r.b_shape)},
          {"b_squared", mat(r.b_squared)},
          {"contradiction", r.contradiction.to_string()},
          {"unsatisfiable", r.unsatisfiable},
          {"random_checked", r.random_checked},
          {"shape_mismatches", r.shape_mismatches},
          {"passed", r.passed}};
}

nlohmann::json to_json(const Order8Refutation& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [o, n] : r.order_histogram) hist[std::to_string(o)] = n;
  return {{"alpha4", r.alpha4.to_string(kTraceNames)},
          {"beta4", r.beta4.to_string(kTraceNames)},
          {"trace_condition", r.trace_condition.to_string(kTraceNames)},
          {"v2_of_two", r.v2_of_two},
          {"sampled_traces", r.sampled_traces},
          {"sampled_traces_consistent", r.sampled_traces_consistent},
          {"finite_order_samples", r.finite_order_samples},
          {"order_histogram", hist},
          {"involutions_classified", r.involutions_classified},
          {"only_minus_identity", r.only_minus_identity},
          {"passed", r.passed}};
}

nlohmann::json to_json(const SylowCertificate& c) {
  return {{"generator", to_json(c.generator)},
          {"subgroup_order", c.subgroup_order},
          {"order8", to_json(c.order8)},
          {"q8", to_json(c.q8)},
          {"maximality_chain", c.maximality_chain},
          {"passed", c.passed}};
}

}  // namespace sylowkit::platonov
