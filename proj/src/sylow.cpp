#include "sylowkit/sylow.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "bitset.hpp"
#include "sylowkit/error.hpp"

namespace sylowkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t p_part(std::size_t n, std::uint64_t p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_p_power(std::size_t n, std::uint64_t p) { return n > 0 && p_part(n, p) == n; }

bool is_p_subgroup(const Subgroup& s, std::uint64_t p) { return is_p_power(s.order(), p); }

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

bool less_members(const Subgroup& a, const Subgroup& b) {
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end());
}

}  // namespace

Subgroup extend_to_maximal_p_subgroup(const GroupPtr& group, const Subgroup& s,
                                      std::uint64_t p) {
  require_prime(p);
  if (!is_p_subgroup(s, p))
    throw NotPGroup("subgroup of order " + std::to_string(s.order()) + " is not a " +
                    std::to_string(p) + "-group");
  const std::size_t full = p_part(group->order(), p);
  Subgroup current = s;
  std::vector<ElementId> gens(current.members().begin(), current.members().end());
  bool grew = true;
  while (grew && current.order() < full) {
    grew = false;
    for (ElementId g = 0; g < group->order(); ++g) {
      if (current.contains(g)) continue;
      gens.push_back(g);
      auto candidate = generate_subgroup_bounded(group, gens, full);
      if (candidate && is_p_subgroup(*candidate, p)) {
        current = std::move(*candidate);
        gens.assign(current.members().begin(), current.members().end());
        grew = true;
        break;
      }
      gens.pop_back();
    }
  }
  if (current.order() != full)
    throw InternalInconsistency("maximal " + std::to_string(p) + "-subgroup of order " +
                                std::to_string(current.order()) + " in " + group->label() +
                                " misses the p-part " + std::to_string(full));
  return current;
}

std::vector<Subgroup> all_sylow_p(const GroupPtr& group, std::uint64_t p) {
  const Subgroup first = extend_to_maximal_p_subgroup(group, Subgroup::trivial(group), p);
  std::vector<Subgroup> orbit;
  std::set<std::vector<ElementId>> seen;
  for (ElementId x = 0; x < group->order(); ++x) {
    Subgroup c = conjugate(first, x);
    std::vector<ElementId> key(c.members().begin(), c.members().end());
    if (seen.insert(std::move(key)).second) orbit.push_back(std::move(c));
  }
  std::sort(orbit.begin(), orbit.end(), less_members);
  return orbit;
}

std::optional<std::vector<Subgroup>> maximal_p_subgroups_exhaustive(const GroupPtr& group,
                                                                    std::uint64_t p,
                                                                    std::size_t max_p_subgroups) {
  require_prime(p);
  const std::size_t n = group->order();
  const std::size_t full = p_part(n, p);
  struct Entry {
    detail::Bitset set;
    std::vector<ElementId> gens;
    std::size_t order;
  };
  std::unordered_set<detail::Bitset, detail::BitsetHash> seen;
  std::vector<Entry> found;
  bool overflow = false;
  auto record = [&](const Subgroup& s, std::vector<ElementId> gens) {
    detail::Bitset bits(n);
    for (ElementId g : s.members()) bits.set(g);
    if (seen.insert(bits).second) {
      found.push_back({std::move(bits), std::move(gens), s.order()});
      if (found.size() > max_p_subgroups) overflow = true;
    }
  };
  record(Subgroup::trivial(group), {});
  std::vector<ElementId> p_elements;
  for (ElementId g = 1; g < n; ++g)
    if (is_p_power(element_order(*group, g), p)) {
      p_elements.push_back(g);
      const ElementId one[] = {g};
      record(generate_subgroup(group, one), {g});
    }
  for (std::size_t k = 1; k < found.size() && !overflow; ++k) {
    for (ElementId g : p_elements) {
      if (found[k].set.test(g)) continue;
      auto gens = found[k].gens;
      gens.push_back(g);
      auto s = generate_subgroup_bounded(group, gens, full);
      if (s && is_p_subgroup(*s, p)) record(*s, std::move(gens));
      if (overflow) break;
    }
  }
  if (overflow) return std::nullopt;

  std::vector<Subgroup> maximal;
  for (std::size_t a = 0; a < found.size(); ++a) {
    bool is_max = true;
    for (std::size_t b = 0; b < found.size() && is_max; ++b)
      if (found[b].order > found[a].order && found[a].set.is_subset_of(found[b].set))
        is_max = false;
    if (!is_max) continue;
    std::vector<ElementId> members;
    for (ElementId g = 0; g < n; ++g)
      if (found[a].set.test(g)) members.push_back(g);
    maximal.emplace_back(group, std::move(members));
  }
  std::sort(maximal.begin(), maximal.end(), less_members);
  return maximal;
}

SylowReport verify_sylow_theorems(const GroupPtr& group, std::uint64_t p) {
  require_prime(p);
  SylowReport report;
  report.group_label = group->label();
  report.p = p;
  report.sylow_order = p_part(group->order(), p);
  const auto sylows = all_sylow_p(group, p);
  report.count = sylows.size();
  report.count_mod_p = report.count % p;
  report.all_conjugate = true;
  for (const auto& s : sylows) {
    if (s.order() != report.sylow_order || !is_closed_subgroup(s)) report.all_conjugate = false;
    if (!find_subgroup_conjugator(group, sylows.front(), s)) report.all_conjugate = false;
  }
  if (group->order() <= 300) {
    if (auto exhaustive = maximal_p_subgroups_exhaustive(group, p))
      report.exhaustive_agrees = *exhaustive == sylows;
  }
  return report;
}

}  // namespace sylowkit
