#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylowkit/group.hpp"

namespace sylowkit {

// Conjugator search for Sylow 2-subgroups by intersection escalation.
//
// Given distinct Sylow 2-subgroups P and Q with D = P ∩ Q, both N_P(D) and
// N_Q(D) strictly contain D, so N_G(D)/D contains involutions ī (from P)
// and j̄ (from Q). Either they are conjugate in N_G(D)/D (case 1), which
// yields x with D < <D, j> <= P^x ∩ Q, or some involution k̄ commutes with
// both (case 2), which yields Sylow 2-subgroups R_i ⊇ <D,i,k> and
// R_j ⊇ <D,j,k> and a chain P - R_i - R_j - Q whose consecutive
// intersections all strictly contain D. Recursing on the produced pairs
// terminates because intersection orders grow and are bounded by |P|.

enum class StepKind { case1_conjugate, case2_common_involution };

const char* to_string(StepKind kind);

struct LegPair {
  Subgroup first;
  Subgroup second;
  std::size_t intersection_order = 0;
};

struct EscalationStep {
  StepKind kind = StepKind::case1_conjugate;
  std::size_t d_order = 0;
  // Quotient ids in N_G(D)/D and their least-id lifts in G.
  ElementId i_bar = 0, j_bar = 0;
  ElementId i_lift = 0, j_lift = 0;
  std::optional<ElementId> k_bar, k_lift;
  /// One pair for case 1, three consecutive pairs for case 2.
  std::vector<LegPair> produced;
  /// Case 1 only: x with P^x = x P x^-1 meeting Q in more than D.
  std::optional<ElementId> conjugator_fragment;
  /// Index of the step whose leg this step resolves; nullopt for the root.
  std::optional<std::size_t> parent;
  std::size_t parent_leg = 0;
};

struct ConjugatorTrace {
  std::vector<EscalationStep> steps;  // depth-first order
  ElementId conjugator = kIdentity;
  std::size_t rounds = 0;
};

/// One round of escalation. Throws PreconditionViolation when P = Q,
/// NotSylow when P or Q is not a Sylow 2-subgroup, NotTwoGroup when a
/// case-2 group <D,i,k> is not a 2-group and DichotomyFailure when neither
/// case applies.
EscalationStep escalation_step(const GroupPtr& group, const Subgroup& p, const Subgroup& q);

/// Returns a trace whose conjugator g satisfies g P g^-1 = Q (verified).
ConjugatorTrace find_conjugator(const GroupPtr& group, const Subgroup& p, const Subgroup& q);

/// Every non-root step has a larger D than the step whose leg it resolves,
/// and every produced pair meets in more than its step's D.
bool trace_is_monotone(const ConjugatorTrace& trace);

struct DichotomyEntry {
  ElementId g = 0, h = 0;
  std::optional<ElementId> conjugator;         // least x with x g x^-1 = h
  std::optional<ElementId> common_involution;  // least y when not conjugate
};

struct DichotomyReport {
  std::string group_label;
  std::size_t involution_count = 0;
  std::vector<DichotomyEntry> entries;  // unordered pairs g < h
  std::vector<std::pair<ElementId, ElementId>> failures;

  std::size_t conjugate_pairs() const;
  std::size_t commuting_pairs() const;
};

/// Checks, for every unordered pair of distinct involutions, that they are
/// conjugate or commute with a common involution.
DichotomyReport check_involution_dichotomy(const GroupPtr& group);

}  // namespace sylowkit
