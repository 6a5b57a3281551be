#include "sylowkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "bitset.hpp"
#include "sylowkit/error.hpp"
#include "sylowkit/random.hpp"

namespace sylowkit {

// ---------------------------------------------------------------------------
// Permutations

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

Permutation invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<std::uint16_t>(x);
  return r;
}

std::string cycle_notation(const Permutation& p) {
  const bool compact = p.size() <= 9;
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first && !compact) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::iota(result.begin(), result.end(), std::uint16_t{0});
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "e" || text.substr(i) == "1") return result;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ParseError("unterminated cycle: " + std::string(text));
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<std::size_t> points;
    const bool spaced = body.find_first_of(" ,") != std::string_view::npos;
    if (spaced) {
      std::size_t j = 0;
      while (j < body.size()) {
        while (j < body.size() && (body[j] == ' ' || body[j] == ',')) ++j;
        std::size_t k = j;
        while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
        if (k == j) {
          if (j < body.size()) throw ParseError("bad cycle point in: " + std::string(text));
          break;
        }
        points.push_back(std::stoul(std::string(body.substr(j, k - j))));
        j = k;
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("bad cycle point in: " + std::string(text));
        points.push_back(static_cast<std::size_t>(ch - '0'));
      }
    }
    for (std::size_t pt : points)
      if (pt == 0 || pt > degree)
        throw ParseError("cycle point out of range in: " + std::string(text));
    // Apply this cycle after the ones to its right, i.e. result = result * cycle
    // read left to right as a product of cycles.
    Permutation cycle(degree);
    std::iota(cycle.begin(), cycle.end(), std::uint16_t{0});
    for (std::size_t k = 0; k < points.size(); ++k)
      cycle[points[k] - 1] = static_cast<std::uint16_t>(points[(k + 1) % points.size()] - 1);
    result = compose(result, cycle);
    i = close + 1;
    skip_ws();
  }
  return result;
}

// ---------------------------------------------------------------------------
// FiniteGroup

GroupPtr FiniteGroup::from_table(std::string label, std::size_t order,
                                 std::vector<ElementId> table,
                                 std::vector<std::string> names) {
  if (order == 0 || table.size() != order * order)
    throw PreconditionViolation("table size does not match order");
  for (ElementId v : table)
    if (v >= order) throw PreconditionViolation("table entry out of range");

  std::optional<ElementId> identity;
  for (ElementId e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (ElementId g = 0; g < order && ok; ++g)
      ok = table[e * order + g] == g && table[g * order + e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw PreconditionViolation("table has no two-sided identity");

  // Swap the identity into slot 0.
  std::vector<ElementId> relabel(order);
  std::iota(relabel.begin(), relabel.end(), ElementId{0});
  std::swap(relabel[0], relabel[*identity]);  // old -> new (an involution)
  std::vector<ElementId> canon(order * order);
  for (ElementId a = 0; a < order; ++a)
    for (ElementId b = 0; b < order; ++b)
      canon[relabel[a] * order + relabel[b]] = relabel[table[a * order + b]];
  if (!names.empty()) {
    if (names.size() != order) throw PreconditionViolation("names size mismatch");
    std::swap(names[0], names[*identity]);
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->label_ = std::move(label);
  g->order_ = order;
  g->backend_ = Backend::cayley;
  g->table_ = std::move(canon);
  g->names_ = std::move(names);
  g->build_inverse();
  return g;
}

GroupPtr FiniteGroup::from_generators(std::string label, std::size_t degree,
                                      std::vector<Permutation> generators) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  for (const auto& gen : generators)
    if (gen.size() != degree) throw PreconditionViolation("generator degree mismatch");

  struct Hash {
    std::size_t operator()(const Permutation& p) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto v : p) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_set<Permutation, Hash> seen{id};
  std::vector<Permutation> elements{id};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& gen : generators) {
      Permutation next = compose(elements[k], gen);
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > kMaxPermutationOrder)
          throw ResourceLimit("permutation group exceeds materialization cap");
      }
    }
  }
  return from_elements(std::move(label), degree, std::move(generators), std::move(elements));
}

GroupPtr FiniteGroup::from_elements(std::string label, std::size_t degree,
                                    std::vector<Permutation> generators,
                                    std::vector<Permutation> elements) {
  if (elements.empty()) throw PreconditionViolation("empty element list");
  if (elements.size() > kMaxPermutationOrder)
    throw ResourceLimit("permutation group exceeds materialization cap");
  std::sort(elements.begin(), elements.end());
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->label_ = std::move(label);
  g->order_ = elements.size();
  g->backend_ = Backend::permutation;
  g->degree_ = degree;
  g->generators_ = std::move(generators);
  g->elements_ = std::move(elements);
  for (ElementId x = 0; x < degree; ++x)
    if (g->elements_[0][x] != x)
      throw PreconditionViolation("element list does not contain the identity");
  if (g->order_ <= kTableCacheMaxOrder) g->build_table_from_permutations();
  g->build_inverse();
  return g;
}

void FiniteGroup::build_table_from_permutations() {
  table_.assign(order_ * order_, 0);
  for (ElementId a = 0; a < order_; ++a)
    for (ElementId b = 0; b < order_; ++b) {
      auto id = find_permutation(compose(elements_[a], elements_[b]));
      if (!id) throw PreconditionViolation("permutation element list is not closed");
      table_[a * order_ + b] = *id;
    }
}

void FiniteGroup::build_inverse() {
  inverse_.assign(order_, 0);
  for (ElementId a = 0; a < order_; ++a) {
    if (backend_ == Backend::permutation) {
      auto id = find_permutation(invert(elements_[a]));
      if (!id) throw PreconditionViolation("permutation element list is not closed under inversion");
      inverse_[a] = *id;
      continue;
    }
    bool found = false;
    for (ElementId b = 0; b < order_ && !found; ++b) {
      if (table_[a * order_ + b] == kIdentity && table_[b * order_ + a] == kIdentity) {
        inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw PreconditionViolation("element without two-sided inverse");
  }
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[a * order_ + b];
  return *find_permutation(compose(elements_[a], elements_[b]));
}

ElementId FiniteGroup::power(ElementId g, long long k) const {
  ElementId base = k < 0 ? inverse_[g] : g;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  ElementId acc = kIdentity;
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

std::optional<ElementId> FiniteGroup::find_permutation(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<ElementId>(it - elements_.begin());
}

std::string FiniteGroup::element_name(ElementId g) const {
  if (backend_ == Backend::permutation) return cycle_notation(elements_[g]);
  if (!names_.empty()) return names_[g];
  return "#" + std::to_string(g);
}

ElementId FiniteGroup::parse_element(std::string_view text) const {
  std::string t(text);
  if (!t.empty() && t[0] == '#') {
    const unsigned long id = std::stoul(t.substr(1));
    if (id >= order_) throw ParseError("element id out of range: " + t);
    return static_cast<ElementId>(id);
  }
  if (backend_ == Backend::permutation) {
    auto id = find_permutation(parse_cycles(text, degree_));
    if (!id) throw ParseError("permutation is not in " + label_ + ": " + t);
    return *id;
  }
  for (ElementId g = 0; g < names_.size(); ++g)
    if (names_[g] == t) return g;
  throw ParseError("unknown element name in " + label_ + ": " + t);
}

bool verify_group_axioms(const FiniteGroup& group) {
  const std::size_t n = group.order();
  for (ElementId g = 0; g < n; ++g) {
    if (group.multiply(kIdentity, g) != g || group.multiply(g, kIdentity) != g) return false;
    const ElementId inv = group.inverse(g);
    if (group.multiply(g, inv) != kIdentity || group.multiply(inv, g) != kIdentity) return false;
  }
  auto assoc = [&](ElementId a, ElementId b, ElementId c) {
    return group.multiply(group.multiply(a, b), c) == group.multiply(a, group.multiply(b, c));
  };
  if (n <= 64) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
  } else {
    Rng rng;
    const auto hi = static_cast<std::int64_t>(n) - 1;
    for (int t = 0; t < 10'000; ++t) {
      const auto a = static_cast<ElementId>(rng.uniform(0, hi));
      const auto b = static_cast<ElementId>(rng.uniform(0, hi));
      const auto c = static_cast<ElementId>(rng.uniform(0, hi));
      if (!assoc(a, b, c)) return false;
    }
  }
  if (group.backend() == FiniteGroup::Backend::permutation) {
    for (ElementId g = 1; g < n; ++g)
      if (!(group.permutation(g - 1) < group.permutation(g))) return false;  // sorted, no duplicates
    for (ElementId a = 0; a < n; ++a) {
      if (!group.find_permutation(invert(group.permutation(a)))) return false;
      for (const auto& gen : group.generators())
        if (!group.find_permutation(compose(group.permutation(a), gen))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_->order(), false);
  for (ElementId g : members_) {
    if (g >= parent_->order()) throw PreconditionViolation("subgroup member outside parent");
    mask_[g] = true;
  }
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return Subgroup(std::move(parent), {kIdentity});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<ElementId> all(parent->order());
  std::iota(all.begin(), all.end(), ElementId{0});
  return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(),
                     [&](ElementId g) { return other.contains(g); });
}

bool is_closed_subgroup(const Subgroup& s) {
  const auto& g = s.group();
  if (!s.contains(kIdentity)) return false;
  for (ElementId a : s.members()) {
    if (!s.contains(g.inverse(a))) return false;
    for (ElementId b : s.members())
      if (!s.contains(g.multiply(a, b))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subgroup operations

std::optional<Subgroup> generate_subgroup_bounded(const GroupPtr& group,
                                                  std::span<const ElementId> generators,
                                                  std::size_t max_order) {
  std::vector<bool> seen(group->order(), false);
  std::vector<ElementId> members{kIdentity};
  seen[kIdentity] = true;
  // In a finite group closure under right multiplication by the generators
  // is already closure under products and inverses.
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (ElementId gen : generators) {
      const ElementId next = group->multiply(members[k], gen);
      if (!seen[next]) {
        seen[next] = true;
        members.push_back(next);
        if (members.size() > max_order) return std::nullopt;
      }
    }
  }
  return Subgroup(group, std::move(members));
}

Subgroup generate_subgroup(const GroupPtr& group, std::span<const ElementId> generators) {
  for (ElementId g : generators)
    if (g >= group->order()) throw PreconditionViolation("generator outside group");
  return *generate_subgroup_bounded(group, generators, group->order());
}

Subgroup intersection(const Subgroup& x, const Subgroup& y) {
  std::vector<ElementId> common;
  std::set_intersection(x.members().begin(), x.members().end(), y.members().begin(),
                        y.members().end(), std::back_inserter(common));
  return Subgroup(x.parent(), std::move(common));
}

Subgroup conjugate(const Subgroup& s, ElementId x) {
  std::vector<ElementId> image;
  image.reserve(s.order());
  for (ElementId g : s.members()) image.push_back(s.group().conjugate(g, x));
  return Subgroup(s.parent(), std::move(image));
}

Subgroup centralizer(const GroupPtr& group, std::span<const ElementId> set) {
  std::vector<ElementId> members;
  for (ElementId g = 0; g < group->order(); ++g) {
    bool ok = true;
    for (ElementId s : set)
      if (!group->commute(g, s)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(g);
  }
  return Subgroup(group, std::move(members));
}

Subgroup normalizer(const GroupPtr& group, const Subgroup& s) {
  std::vector<ElementId> members;
  for (ElementId g = 0; g < group->order(); ++g) {
    bool ok = true;
    for (ElementId h : s.members())
      if (!s.contains(group->conjugate(h, g))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(g);
  }
  return Subgroup(group, std::move(members));
}

std::size_t element_order(const FiniteGroup& group, ElementId g) {
  std::size_t k = 1;
  for (ElementId x = g; x != kIdentity; x = group.multiply(x, g)) ++k;
  return k;
}

std::vector<ElementId> involutions(const FiniteGroup& group) {
  std::vector<ElementId> out;
  for (ElementId g = 1; g < group.order(); ++g)
    if (group.multiply(g, g) == kIdentity) out.push_back(g);
  return out;
}

std::optional<ElementId> find_subgroup_conjugator(const GroupPtr& group, const Subgroup& p,
                                                  const Subgroup& q) {
  if (p.order() != q.order()) return std::nullopt;
  for (ElementId x = 0; x < group->order(); ++x) {
    bool ok = true;
    for (ElementId h : p.members())
      if (!q.contains(group->conjugate(h, x))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quotients

ElementId QuotientGroup::project(ElementId g) const {
  if (g >= coset_of_.size() || !numerator_.contains(g))
    throw PreconditionViolation("element outside the quotient numerator");
  return coset_of_[g];
}

std::vector<ElementId> QuotientGroup::image(const Subgroup& s) const {
  std::vector<ElementId> out;
  for (ElementId g : s.members()) out.push_back(project(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuotientGroup quotient(const Subgroup& numerator, const Subgroup& kernel) {
  const auto& group = numerator.parent();
  if (kernel.parent() != group) throw PreconditionViolation("subgroups of different groups");
  if (!kernel.is_subset_of(numerator))
    throw PreconditionViolation("kernel is not contained in the numerator");
  for (ElementId h : numerator.members())
    for (ElementId d : kernel.members())
      if (!kernel.contains(group->conjugate(d, h)))
        throw NotNormal("kernel is not normal: conjugation by " + group->element_name(h) +
                        " moves " + group->element_name(d));

  constexpr ElementId kUnassigned = ~ElementId{0};
  std::vector<ElementId> coset_of(group->order(), kUnassigned);
  std::vector<ElementId> reps;
  for (ElementId h : numerator.members()) {  // ascending, so the rep is the least id
    if (coset_of[h] != kUnassigned) continue;
    const auto q = static_cast<ElementId>(reps.size());
    reps.push_back(h);
    for (ElementId d : kernel.members()) coset_of[group->multiply(h, d)] = q;
  }
  const std::size_t n = reps.size();
  std::vector<ElementId> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = coset_of[group->multiply(reps[a], reps[b])];
  std::vector<std::string> names;
  names.reserve(n);
  for (ElementId r : reps) names.push_back("[" + group->element_name(r) + "]");
  auto carrier = FiniteGroup::from_table(
      numerator.group().label() + "/" + std::to_string(kernel.order()), n, std::move(table),
      std::move(names));
  return QuotientGroup(std::move(carrier), numerator, kernel, std::move(reps),
                       std::move(coset_of));
}

// ---------------------------------------------------------------------------
// Centralizer dimension

std::size_t centralizer_dimension(const GroupPtr& group, const Limits& limits) {
  const std::size_t n = group->order();
  std::vector<detail::Bitset> singles;
  singles.reserve(n);
  for (ElementId g = 0; g < n; ++g) {
    detail::Bitset c(n);
    for (ElementId h = 0; h < n; ++h)
      if (group->commute(g, h)) c.set(h);
    singles.push_back(std::move(c));
  }

  std::unordered_set<detail::Bitset, detail::BitsetHash> seen;
  std::vector<detail::Bitset> all;
  auto add = [&](detail::Bitset c) {
    if (seen.insert(c).second) {
      all.push_back(std::move(c));
      if (all.size() > limits.max_centralizers)
        throw ResourceLimit("more than " + std::to_string(limits.max_centralizers) +
                            " distinct centralizers in " + group->label());
    }
  };
  add(singles[kIdentity]);  // C(e) = G
  for (const auto& c : singles) add(c);
  // Every centralizer C(X) is an intersection of single-element ones.
  for (std::size_t k = 0; k < all.size(); ++k)
    for (const auto& c : singles) add(all[k] & c);

  std::vector<std::size_t> idx(all.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::size_t> size(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) size[k] = all[k].count();
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return size[a] > size[b]; });

  // Longest path from G (index 0 after sorting: the unique largest) in the
  // strict inclusion order.
  std::vector<std::size_t> depth(all.size(), 0);
  std::size_t best = 0;
  for (std::size_t a = 1; a < idx.size(); ++a) {
    const auto& ca = all[idx[a]];
    for (std::size_t b = 0; b < a; ++b) {
      if (size[idx[b]] > size[idx[a]] && ca.is_subset_of(all[idx[b]]))
        depth[a] = std::max(depth[a], depth[b] + 1);
    }
    best = std::max(best, depth[a]);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Subgroup lattice

std::vector<Subgroup> all_subgroups(const GroupPtr& group, const Limits& limits) {
  const std::size_t n = group->order();
  struct Entry {
    detail::Bitset set;
    std::vector<ElementId> gens;
  };
  std::unordered_set<detail::Bitset, detail::BitsetHash> seen;
  std::vector<Entry> found;
  auto close = [&](std::vector<ElementId> gens) {
    Subgroup s = generate_subgroup(group, gens);
    detail::Bitset bits(n);
    for (ElementId g : s.members()) bits.set(g);
    if (seen.insert(bits).second) {
      found.push_back({std::move(bits), std::move(gens)});
      if (found.size() > limits.max_subgroups)
        throw ResourceLimit("more than " + std::to_string(limits.max_subgroups) +
                            " subgroups in " + group->label());
    }
  };
  close({});
  for (ElementId g = 1; g < n; ++g) close({g});
  const std::size_t cyclic_count = found.size();
  std::vector<ElementId> cyclic_gens;
  for (std::size_t k = 1; k < cyclic_count; ++k) cyclic_gens.push_back(found[k].gens[0]);
  // Every subgroup is a join of cyclic subgroups.
  for (std::size_t k = 1; k < found.size(); ++k) {
    for (ElementId g : cyclic_gens) {
      if (found[k].set.test(g)) continue;
      auto gens = found[k].gens;
      gens.push_back(g);
      close(std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& e : found) {
    std::vector<ElementId> members;
    for (ElementId g = 0; g < n; ++g)
      if (e.set.test(g)) members.push_back(g);
    out.emplace_back(group, std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return out;
}

bool check_normalizer_condition(const GroupPtr& group, const Limits& limits) {
  for (const auto& h : all_subgroups(group, limits)) {
    if (h.order() == group->order()) continue;
    if (normalizer(group, h).order() == h.order()) return false;
  }
  return true;
}

}  // namespace sylowkit
