#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylowkit/group.hpp"

namespace sylowkit {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, std::uint64_t p);
bool is_p_power(std::size_t n, std::uint64_t p);

/// A subgroup is a p-group iff its order is a power of p.
bool is_p_subgroup(const Subgroup& s, std::uint64_t p);

/// Greedy extension: repeatedly adjoins the least-id element g for which
/// <S, g> is still a p-group. Throws NotPGroup when S is not a p-group and
/// InternalInconsistency if the result misses the p-part of |G|.
Subgroup extend_to_maximal_p_subgroup(const GroupPtr& group, const Subgroup& s,
                                      std::uint64_t p);

/// Conjugation orbit of one Sylow p-subgroup, sorted by members.
std::vector<Subgroup> all_sylow_p(const GroupPtr& group, std::uint64_t p);

/// Independent oracle: enumerates p-subgroups as joins of cyclic p-subgroups
/// and keeps the maximal ones. Returns nullopt when more than `max_p_subgroups`
/// p-subgroups exist.
std::optional<std::vector<Subgroup>> maximal_p_subgroups_exhaustive(
    const GroupPtr& group, std::uint64_t p, std::size_t max_p_subgroups = 20'000);

struct SylowReport {
  std::string group_label;
  std::uint64_t p = 0;
  std::size_t sylow_order = 0;
  std::size_t count = 0;
  std::size_t count_mod_p = 0;
  bool all_conjugate = false;
  /// Set when the exhaustive maximal-p-subgroup oracle ran (|G| <= 300).
  std::optional<bool> exhaustive_agrees;
};

SylowReport verify_sylow_theorems(const GroupPtr& group, std::uint64_t p);

}  // namespace sylowkit
