#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sylowkit/exactmat.hpp"
#include "sylowkit/polynomial.hpp"
#include "sylowkit/random.hpp"

namespace sylowkit::platonov {

// Non-conjugate Sylow 2-subgroups of SL2(Q).
//
// For a prime p = 3 (mod 4) let g_p = [0 -p; 1/p 0]. Then <g_p> has order 4,
// and for distinct such primes the subgroups <g_p> are not conjugate in
// SL2(Q): a conjugator [a b; c d] would satisfy p_i(a^2 + c^2 p_j^2) = ±p_j,
// impossible by p_j-adic valuation parity (+) or by sign (-).

struct Generator {
  std::uint64_t p = 0;
  Mat2 matrix;
  Mat2 square;
  unsigned order = 0;
};

/// Throws BadPrime unless p is a prime with p = 3 (mod 4).
Generator generator(std::uint64_t p);

/// The elimination for one target T (g_j or g_j^3) of g g_i g^-1 = T.
struct CaseDerivation {
  std::string target_name;
  Mat2 target;
  /// g*g_i = T*g entrywise, in the order (1,1), (2,1), (1,2), (2,2).
  std::array<Equation, 4> entry_equations;
  Poly multiplier_first;  // applied to entry equation (1,1): -c*p_i
  Poly multiplier_third;  // applied to entry equation (1,2): -a/p_j
  Equation scaled_first, scaled_third;
  Equation ad_solved;  // ad = ...
  Equation bc_solved;  // bc = ...
  Equation det_condition;  // ad - bc = 1
  Equation substituted;
  /// Normalized to positive a^2 coefficient: p_i a^2 + p_i p_j^2 c^2 = ±p_j.
  Equation final_equation;
  Rational coef_a2, coef_c2, rhs;
};

struct ParityRefutation {
  std::uint64_t prime = 0;  // p_j
  long v_rhs = 0;           // v_{p_j}(p_j) = 1
  long v_coefficient = 0;   // v_{p_j}(p_i) = 0
  bool lemma_applies = false;  // p_j = 3 (mod 4)
  std::size_t sampled_pairs = 0;
  std::size_t sampled_violations = 0;  // LHS valuation odd or equal to v_rhs
};

struct SignRefutation {
  bool coefficients_positive = false;
  bool rhs_negative = false;
  bool zero_violates_det = false;
};

struct NonConjugacyCertificate {
  std::uint64_t p_i = 0, p_j = 0;
  CaseDerivation case1, case2;
  ParityRefutation parity;
  SignRefutation sign;
  std::size_t sampled_conjugators = 0;
  std::size_t conjugating_samples = 0;

  bool case1_matches_expected() const;
  bool case2_matches_expected() const;
  bool refuted() const;
};

/// Throws BadPrime or SamePrime. Sampling uses 10^3 rational (a, c) pairs
/// and 10^3 random SL2(Q) conjugators by default.
NonConjugacyCertificate nonconjugacy_certificate(std::uint64_t p_i, std::uint64_t p_j, Rng& rng,
                                                 std::size_t samples = 1000);

/// Runs the elimination for g g_i g^-1 = target.
CaseDerivation derive_case(std::uint64_t p_i, std::uint64_t p_j, const Mat2& target,
                           std::string target_name);

nlohmann::json to_json(const NonConjugacyCertificate& cert);
NonConjugacyCertificate certificate_from_json(const nlohmann::json& j);
/// Re-checks a certificate from its own content: every derivation step is
/// recomputed from the previous one and compared. Returns the list of
/// failed checks (empty when sound).
std::vector<std::string> verify_certificate(const NonConjugacyCertificate& cert);

struct Q8Refutation {
  Mat2 a_canonical;
  bool a_squares_to_minus_identity = false;
  std::string assumption;  // real-conjugacy normal form, cited
  std::array<Equation, 4> anticommutation;  // AB + BA = 0 entrywise
  std::map<int, Poly> solved;                // unknown index -> value
  PolyMat2 b_shape;
  PolyMat2 b_squared;
  Equation contradiction;  // a^2 + b^2 = -1
  bool unsatisfiable = false;
  std::size_t random_checked = 0;
  std::size_t shape_mismatches = 0;
  bool passed = false;
};

Q8Refutation q8_embedding_refutation(Rng& rng, std::size_t samples = 1000);

struct Order8Refutation {
  // M^4 = alpha(t) M + beta(t) I for M with trace t and det 1.
  Poly alpha4, beta4;
  Equation trace_condition;  // t^2 = 2
  long v2_of_two = 0;
  std::size_t sampled_traces = 0;
  bool sampled_traces_consistent = false;
  std::size_t finite_order_samples = 0;
  std::map<unsigned, std::size_t> order_histogram;
  std::size_t involutions_classified = 0;
  bool only_minus_identity = false;
  bool passed = false;
};

Order8Refutation order8_impossibility(Rng& rng, std::size_t samples = 1000);

struct SylowCertificate {
  Generator generator;
  std::size_t subgroup_order = 0;
  Order8Refutation order8;
  Q8Refutation q8;
  std::vector<std::string> maximality_chain;
  bool passed = false;
};

/// Throws BadPrime.
SylowCertificate sylow_certificate(std::uint64_t p, Rng& rng, std::size_t samples = 1000);

nlohmann::json to_json(const Generator& g);
nlohmann::json to_json(const Q8Refutation& r);
nlohmann::json to_json(const Order8Refutation& r);
nlohmann::json to_json(const SylowCertificate& c);

/// The first `count` primes congruent to 3 mod 4.
std::vector<std::uint64_t> primes_3_mod_4(std::size_t count);

}  // namespace sylowkit::platonov
