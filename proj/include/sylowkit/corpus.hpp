#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sylowkit/group.hpp"

namespace sylowkit {

GroupPtr cyclic(std::size_t n);
/// Dihedral group of order `order` (must be even); "D8" has 8 elements.
GroupPtr dihedral(std::size_t order);
GroupPtr symmetric(std::size_t n);
GroupPtr alternating(std::size_t n);
GroupPtr quaternion8();
/// Cayley table of G x H with id(g, h) = g * |H| + h.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

/// Grammar for corpus names:
///   name   := factor ('x' factor)*
///   factor := 'C' n | 'D' n | 'S' n | 'A' n | 'Q8'
/// where "Dn" is the dihedral group of order n. Products associate to the
/// left. Throws UnknownGroup with the grammar in its message otherwise.
GroupPtr group_by_name(std::string_view name);

inline constexpr std::string_view kGroupNameGrammar =
    "name := factor ('x' factor)*; factor := C<n> | D<n> (dihedral of order n, n even) | "
    "S<n> | A<n> | Q8   e.g. C12, D8, S4, A5, Q8, C2xC2, S3xC2";

/// Names of the standard corpus with order <= max_order: every C_n and
/// dihedral D_n, Q8, S_n and A_n for n <= 5, and a fixed list of direct
/// products.
std::vector<std::string> corpus_names(std::size_t max_order);

/// Orders of corpus names without building the groups.
std::size_t order_of_name(std::string_view name);

}  // namespace sylowkit
