#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylowkit {

/// Dense element index inside a FiniteGroup; 0 is always the identity.
using ElementId = std::uint32_t;
inline constexpr ElementId kIdentity = 0;

/// One-line notation, 0-based: `p[x]` is the image of point x.
using Permutation = std::vector<std::uint16_t>;

/// Configurable bounds for the exhaustive computations.
struct Limits {
  std::size_t max_centralizers = 10'000;
  std::size_t max_subgroups = 1'000;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// An enumerable finite group. Immutable after construction.
///
/// Two backends exist. A Cayley group is defined by its multiplication
/// table. A permutation group materializes its full element list, sorted
/// lexicographically by image tuple (so the identity lands on id 0), and
/// caches a multiplication table when the order is small enough.
/// Permutation products compose right to left: (a*b)(x) = a(b(x)).
class FiniteGroup {
 public:
  enum class Backend { cayley, permutation };

  /// Orders above this are multiplied by composing permutations.
  static constexpr std::size_t kTableCacheMaxOrder = 1024;
  /// Hard cap on materialized permutation groups.
  static constexpr std::size_t kMaxPermutationOrder = 200'000;

  /// Builds a group from a row-major `order x order` table. Elements are
  /// relabelled so that the identity gets id 0. Throws PreconditionViolation
  /// when the table has no identity or some element has no inverse.
  static GroupPtr from_table(std::string label, std::size_t order,
                             std::vector<ElementId> table,
                             std::vector<std::string> names = {});

  /// Closes `generators` under composition and materializes the group.
  static GroupPtr from_generators(std::string label, std::size_t degree,
                                  std::vector<Permutation> generators);

  /// Uses an already complete element list (closure is not re-checked here;
  /// see verify_group_axioms).
  static GroupPtr from_elements(std::string label, std::size_t degree,
                                std::vector<Permutation> generators,
                                std::vector<Permutation> elements);

  std::size_t order() const noexcept { return order_; }
  Backend backend() const noexcept { return backend_; }
  const std::string& label() const noexcept { return label_; }
  ElementId identity() const noexcept { return kIdentity; }
  bool has_table() const noexcept { return !table_.empty(); }

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  /// x g x^-1.
  ElementId conjugate(ElementId g, ElementId x) const {
    return multiply(multiply(x, g), inverse_[x]);
  }
  ElementId power(ElementId g, long long k) const;
  bool commute(ElementId a, ElementId b) const {
    return multiply(a, b) == multiply(b, a);
  }

  std::string element_name(ElementId g) const;
  /// Accepts element names, cycle notation for permutation groups
  /// ("(12)(34)", "(1 2 10)", "()"), or "#<id>".
  ElementId parse_element(std::string_view text) const;

  std::size_t degree() const noexcept { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }
  const Permutation& permutation(ElementId g) const { return elements_[g]; }
  std::optional<ElementId> find_permutation(const Permutation& p) const;

 private:
  FiniteGroup() = default;
  void build_inverse();
  void build_table_from_permutations();

  std::string label_;
  std::size_t order_ = 0;
  Backend backend_ = Backend::cayley;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::string> names_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& p);
/// Compact cycle notation when degree <= 9 ("(12)(345)"), spaced otherwise.
std::string cycle_notation(const Permutation& p);
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Full associativity check for order <= 64, 10^4 seeded random triples
/// above; plus identity/inverse laws and (permutation backend) closure and
/// absence of duplicates.
bool verify_group_axioms(const FiniteGroup& group);

/// A set of element ids of a parent group, kept sorted. The constructor does
/// not check closure; operations in this library only produce closed sets,
/// and is_closed_subgroup() is available for explicit verification.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<ElementId> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const FiniteGroup& group() const { return *parent_; }
  const GroupPtr& parent() const { return parent_; }
  std::span<const ElementId> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(ElementId g) const { return g < mask_.size() && mask_[g]; }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& x, const Subgroup& y) {
    return x.parent_ == y.parent_ && x.members_ == y.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<ElementId> members_;
  std::vector<bool> mask_;
};

bool is_closed_subgroup(const Subgroup& s);

/// N/D realised as a Cayley group. Quotient id 0 is the coset D itself;
/// quotient ids follow the order of the least element of each coset, and
/// that least element is the coset representative.
class QuotientGroup {
 public:
  const GroupPtr& carrier() const { return carrier_; }
  const Subgroup& numerator() const { return numerator_; }
  const Subgroup& kernel() const { return kernel_; }
  std::span<const ElementId> coset_reps() const { return reps_; }

  ElementId lift(ElementId q) const { return reps_[q]; }
  /// Throws PreconditionViolation when g is outside the numerator.
  ElementId project(ElementId g) const;
  /// Sorted quotient ids of the cosets meeting `s` (s must lie in the
  /// numerator).
  std::vector<ElementId> image(const Subgroup& s) const;

 private:
  friend QuotientGroup quotient(const Subgroup& numerator,
                                const Subgroup& kernel);
  QuotientGroup(GroupPtr carrier, Subgroup numerator, Subgroup kernel,
                std::vector<ElementId> reps, std::vector<ElementId> coset_of)
      : carrier_(std::move(carrier)),
        numerator_(std::move(numerator)),
        kernel_(std::move(kernel)),
        reps_(std::move(reps)),
        coset_of_(std::move(coset_of)) {}

  GroupPtr carrier_;
  Subgroup numerator_;
  Subgroup kernel_;
  std::vector<ElementId> reps_;
  std::vector<ElementId> coset_of_;
};

Subgroup generate_subgroup(const GroupPtr& group,
                           std::span<const ElementId> generators);
/// Like generate_subgroup but gives up (returns nullopt) as soon as the
/// closure exceeds `max_order` elements.
std::optional<Subgroup> generate_subgroup_bounded(
    const GroupPtr& group, std::span<const ElementId> generators,
    std::size_t max_order);

Subgroup intersection(const Subgroup& x, const Subgroup& y);
/// x S x^-1.
Subgroup conjugate(const Subgroup& s, ElementId x);

Subgroup centralizer(const GroupPtr& group, std::span<const ElementId> set);
Subgroup normalizer(const GroupPtr& group, const Subgroup& s);
std::size_t element_order(const FiniteGroup& group, ElementId g);
std::vector<ElementId> involutions(const FiniteGroup& group);

/// Exhaustive search for the least g with g P g^-1 = Q.
std::optional<ElementId> find_subgroup_conjugator(const GroupPtr& group,
                                                  const Subgroup& p,
                                                  const Subgroup& q);

/// Throws NotNormal when kernel is not normal in numerator, and
/// PreconditionViolation when kernel is not contained in it.
QuotientGroup quotient(const Subgroup& numerator, const Subgroup& kernel);

/// Length (number of strict inclusions) of the longest strictly descending
/// chain of centralizers starting at C(empty) = G. Throws ResourceLimit when
/// the number of distinct centralizers exceeds limits.max_centralizers.
std::size_t centralizer_dimension(const GroupPtr& group,
                                  const Limits& limits = {});

/// Every subgroup, ordered by size then members. Throws ResourceLimit when
/// more than limits.max_subgroups exist.
std::vector<Subgroup> all_subgroups(const GroupPtr& group,
                                    const Limits& limits = {});

/// True iff every proper subgroup is strictly contained in its normalizer.
bool check_normalizer_condition(const GroupPtr& group,
                                const Limits& limits = {});

}  // namespace sylowkit
