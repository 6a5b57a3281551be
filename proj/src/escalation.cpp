#include "sylowkit/escalation.hpp"

#include <algorithm>

#include "sylowkit/error.hpp"
#include "sylowkit/sylow.hpp"

namespace sylowkit {

const char* to_string(StepKind kind) {
  return kind == StepKind::case1_conjugate ? "case1_conjugate" : "case2_common_involution";
}

namespace {

void require_sylow2(const GroupPtr& group, const Subgroup& s, const char* which) {
  if (s.parent() != group) throw PreconditionViolation(std::string(which) + " is not a subgroup of " + group->label());
  if (s.order() != p_part(group->order(), 2) || !is_p_subgroup(s, 2))
    throw NotSylow(std::string(which) + " (order " + std::to_string(s.order()) +
                   ") is not a Sylow 2-subgroup of " + group->label());
}

std::optional<ElementId> least_involution(const FiniteGroup& q, const std::vector<ElementId>& ids) {
  for (ElementId x : ids)
    if (x != kIdentity && q.multiply(x, x) == kIdentity) return x;
  return std::nullopt;
}

}  // namespace

EscalationStep escalation_step(const GroupPtr& group, const Subgroup& p, const Subgroup& q) {
  require_sylow2(group, p, "P");
  require_sylow2(group, q, "Q");
  if (p == q) throw PreconditionViolation("escalation needs distinct Sylow 2-subgroups");

  EscalationStep step;
  const Subgroup d = intersection(p, q);
  step.d_order = d.order();

  const Subgroup n = normalizer(group, d);
  const Subgroup np = intersection(n, p);
  const Subgroup nq = intersection(n, q);
  if (np.order() <= d.order() || nq.order() <= d.order())
    throw InternalInconsistency("normalizer condition fails for D = P ∩ Q in " + group->label());

  const QuotientGroup quot = quotient(n, d);
  const FiniteGroup& bar = *quot.carrier();
  const auto i_bar = least_involution(bar, quot.image(np));
  const auto j_bar = least_involution(bar, quot.image(nq));
  if (!i_bar || !j_bar)
    throw InternalInconsistency("nontrivial 2-group image without involution");
  step.i_bar = *i_bar;
  step.j_bar = *j_bar;
  step.i_lift = quot.lift(*i_bar);
  step.j_lift = quot.lift(*j_bar);

  // Case 1: ī and j̄ conjugate in N_G(D)/D.
  for (ElementId x_bar = 0; x_bar < bar.order(); ++x_bar) {
    if (bar.conjugate(*i_bar, x_bar) != *j_bar) continue;
    const ElementId x = quot.lift(x_bar);
    Subgroup p1 = conjugate(p, x);
    if (!p1.contains(step.j_lift) || !d.is_subset_of(p1))
      throw InternalInconsistency("case 1 lift: j is not in P^x ∩ Q or D is not in P^x");
    step.kind = StepKind::case1_conjugate;
    step.conjugator_fragment = x;
    const std::size_t meet = intersection(p1, q).order();
    step.produced.push_back({std::move(p1), q, meet});
    return step;
  }

  // Case 2: a common commuting involution k̄.
  std::optional<ElementId> k_bar;
  for (ElementId k = 1; k < bar.order() && !k_bar; ++k)
    if (bar.multiply(k, k) == kIdentity && bar.commute(k, *i_bar) && bar.commute(k, *j_bar))
      k_bar = k;
  if (!k_bar)
    throw DichotomyFailure("involutions " + bar.element_name(*i_bar) + " and " +
                           bar.element_name(*j_bar) + " of " + bar.label() +
                           " are neither conjugate nor centralized by a common involution");
  step.kind = StepKind::case2_common_involution;
  step.k_bar = k_bar;
  step.k_lift = quot.lift(*k_bar);

  auto two_group = [&](ElementId extra) {
    std::vector<ElementId> gens(d.members().begin(), d.members().end());
    gens.push_back(extra);
    gens.push_back(*step.k_lift);
    Subgroup s = generate_subgroup(group, gens);
    if (!is_p_subgroup(s, 2))
      throw NotTwoGroup("<D, " + group->element_name(extra) + ", " +
                        group->element_name(*step.k_lift) + "> has order " +
                        std::to_string(s.order()));
    return s;
  };
  const Subgroup r_i = extend_to_maximal_p_subgroup(group, two_group(step.i_lift), 2);
  const Subgroup r_j = extend_to_maximal_p_subgroup(group, two_group(step.j_lift), 2);
  step.produced.push_back({p, r_i, intersection(p, r_i).order()});
  step.produced.push_back({r_i, r_j, intersection(r_i, r_j).order()});
  step.produced.push_back({r_j, q, intersection(r_j, q).order()});
  for (const auto& leg : step.produced)
    if (leg.intersection_order <= step.d_order)
      throw InternalInconsistency("case 2 leg does not enlarge the intersection");
  return step;
}

namespace {

ElementId resolve(const GroupPtr& group, const Subgroup& p, const Subgroup& q,
                  std::optional<std::size_t> parent, std::size_t parent_leg,
                  ConjugatorTrace& trace) {
  if (p == q) return kIdentity;
  EscalationStep step = escalation_step(group, p, q);
  step.parent = parent;
  step.parent_leg = parent_leg;
  const std::size_t index = trace.steps.size();
  trace.steps.push_back(step);
  if (step.kind == StepKind::case1_conjugate) {
    const ElementId rest =
        resolve(group, step.produced[0].first, step.produced[0].second, index, 0, trace);
    return group->multiply(rest, *step.conjugator_fragment);
  }
  // Legs P -> R_i, R_i -> R_j, R_j -> Q; the composite applies them in order.
  ElementId g = kIdentity;
  for (std::size_t leg = 0; leg < step.produced.size(); ++leg) {
    const ElementId part = resolve(group, step.produced[leg].first, step.produced[leg].second,
                                   index, leg, trace);
    g = group->multiply(part, g);
  }
  return g;
}

}  // namespace

ConjugatorTrace find_conjugator(const GroupPtr& group, const Subgroup& p, const Subgroup& q) {
  require_sylow2(group, p, "P");
  require_sylow2(group, q, "Q");
  ConjugatorTrace trace;
  trace.conjugator = resolve(group, p, q, std::nullopt, 0, trace);
  trace.rounds = trace.steps.size();
  if (!(conjugate(p, trace.conjugator) == q))
    throw InternalInconsistency("composed conjugator does not map P onto Q");
  return trace;
}

bool trace_is_monotone(const ConjugatorTrace& trace) {
  for (const auto& step : trace.steps) {
    for (const auto& leg : step.produced)
      if (leg.intersection_order <= step.d_order) return false;
    if (step.parent) {
      const auto& parent = trace.steps[*step.parent];
      if (step.d_order <= parent.d_order) return false;
      if (step.d_order != parent.produced[step.parent_leg].intersection_order) return false;
    }
  }
  return true;
}

std::size_t DichotomyReport::conjugate_pairs() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const DichotomyEntry& e) { return e.conjugator.has_value(); }));
}

std::size_t DichotomyReport::commuting_pairs() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const DichotomyEntry& e) {
    return e.common_involution.has_value();
  }));
}

DichotomyReport check_involution_dichotomy(const GroupPtr& group) {
  DichotomyReport report;
  report.group_label = group->label();
  const auto invs = involutions(*group);
  report.involution_count = invs.size();
  for (std::size_t a = 0; a < invs.size(); ++a) {
    for (std::size_t b = a + 1; b < invs.size(); ++b) {
      DichotomyEntry e{invs[a], invs[b], std::nullopt, std::nullopt};
      for (ElementId x = 0; x < group->order(); ++x)
        if (group->conjugate(e.g, x) == e.h) {
          e.conjugator = x;
          break;
        }
      if (!e.conjugator) {
        for (ElementId y : invs)
          if (group->commute(y, e.g) && group->commute(y, e.h)) {
            e.common_involution = y;
            break;
          }
        if (!e.common_involution) report.failures.emplace_back(e.g, e.h);
      }
      report.entries.push_back(e);
    }
  }
  return report;
}

}  // namespace sylowkit
