#include <algorithm>
#include <set>

#include "doctest.h"
#include "sylowkit/corpus.hpp"
#include "sylowkit/error.hpp"
#include "sylowkit/group.hpp"
#include "sylowkit/random.hpp"

using namespace sylowkit;

namespace {

// Oracles below work on raw permutations or raw products only.

std::set<Permutation> closure_oracle(const std::vector<Permutation>& gens, std::size_t n) {
  Permutation id(n);
  for (std::size_t k = 0; k < n; ++k) id[k] = static_cast<std::uint16_t>(k);
  std::set<Permutation> seen{id};
  std::vector<Permutation> todo{id};
  while (!todo.empty()) {
    const Permutation x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Permutation y(n);
      for (std::size_t k = 0; k < n; ++k) y[k] = g[x[k]];
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

std::vector<ElementId> ids(const GroupPtr& g, std::initializer_list<const char*> names) {
  std::vector<ElementId> out;
  for (const char* n : names) out.push_back(g->parse_element(n));
  return out;
}

std::vector<ElementId> brute_centralizer(const FiniteGroup& g, const std::vector<ElementId>& s) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : s) ok = ok && g.multiply(x, y) == g.multiply(y, x);
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> brute_normalizer(const Subgroup& s) {
  const FiniteGroup& g = s.group();
  std::vector<ElementId> out;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : s.members()) ok = ok && s.contains(g.multiply(g.multiply(x, y), g.inverse(x)));
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<ElementId> as_vector(const Subgroup& s) {
  return {s.members().begin(), s.members().end()};
}

}  // namespace

TEST_CASE("permutation ids are lexicographic and products compose right to left") {
  const auto s3 = symmetric(3);
  REQUIRE(s3->order() == 6);
  for (ElementId x = 1; x < s3->order(); ++x) CHECK(s3->permutation(x - 1) < s3->permutation(x));
  CHECK(s3->element_name(0) == "()");
  CHECK(s3->element_name(1) == "(23)");
  CHECK(s3->element_name(2) == "(12)");
  // (12)(23): apply (23) first; 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  const ElementId p = s3->multiply(s3->parse_element("(12)"), s3->parse_element("(23)"));
  CHECK(s3->element_name(p) == "(123)");
  CHECK(s3->conjugate(s3->parse_element("(12)"), s3->parse_element("(23)")) ==
        s3->parse_element("(13)"));
}

TEST_CASE("corpus groups satisfy the group axioms") {
  for (const auto& name : corpus_names(64)) {
    CAPTURE(name);
    const auto g = group_by_name(name);
    CHECK(g->order() == order_of_name(name));
    CHECK(verify_group_axioms(*g));
  }
  CHECK(verify_group_axioms(*alternating(6)));
}

TEST_CASE("group names") {
  CHECK(group_by_name("D8")->order() == 8);
  CHECK(group_by_name("S3xC2")->order() == 12);
  CHECK(group_by_name("C12")->order() == 12);
  CHECK_THROWS_AS(group_by_name("D7"), UnknownGroup);
  CHECK_THROWS_AS(group_by_name("X3"), UnknownGroup);
  CHECK_THROWS_AS(group_by_name(""), UnknownGroup);
}

TEST_CASE("generate_subgroup agrees with a closure oracle") {
  const auto s4 = symmetric(4);
  CHECK(generate_subgroup(s4, std::vector<ElementId>{}).order() == 1);
  const auto two = generate_subgroup(s4, ids(s4, {"(12)", "(34)"}));
  CHECK(two.order() == 4);
  const auto d8 = generate_subgroup(s4, ids(s4, {"(1234)", "(13)"}));
  CHECK(d8.order() == 8);
  CHECK(is_closed_subgroup(d8));

  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ElementId> gens;
    std::vector<Permutation> raw;
    for (int k = 0; k < 2; ++k) {
      const auto x = static_cast<ElementId>(rng.uniform(0, 23));
      gens.push_back(x);
      raw.push_back(s4->permutation(x));
    }
    const auto sub = generate_subgroup(s4, gens);
    const auto oracle = closure_oracle(raw, 4);
    CHECK(sub.order() == oracle.size());
    for (auto x : sub.members()) CHECK(oracle.count(s4->permutation(x)) == 1);
  }

  const auto q8 = quaternion8();
  const auto ci = generate_subgroup(q8, ids(q8, {"i"}));
  CHECK(as_vector(ci) == std::vector<ElementId>(ids(q8, {"1", "-1", "i", "-i"})));
}

TEST_CASE("centralizer and normalizer against brute force") {
  const auto q8 = quaternion8();
  CHECK(centralizer(q8, std::vector<ElementId>{}).order() == 8);
  CHECK(centralizer(q8, ids(q8, {"i"})).order() == 4);
  const auto s3 = symmetric(3);
  const auto c = centralizer(s3, ids(s3, {"(123)"}));
  CHECK(c.order() == 3);

  const auto s4 = symmetric(4);
  const auto d8 = generate_subgroup(s4, ids(s4, {"(1234)", "(13)"}));
  CHECK(normalizer(s4, d8) == d8);
  const auto c3 = generate_subgroup(s3, ids(s3, {"(123)"}));
  CHECK(normalizer(s3, c3).order() == 6);
  CHECK(normalizer(s4, Subgroup::whole(s4)).order() == 24);

  for (const char* name : {"S4", "D12", "Q8xC2", "A5"}) {
    CAPTURE(name);
    const auto g = group_by_name(name);
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<ElementId> s;
      for (int k = 0; k < trial % 3 + 1; ++k)
        s.push_back(static_cast<ElementId>(rng.uniform(0, static_cast<std::int64_t>(g->order()) - 1)));
      const auto cs = centralizer(g, s);
      CHECK(as_vector(cs) == brute_centralizer(*g, s));
      CHECK(is_closed_subgroup(cs));
      // C(C(C(S))) = C(S)
      const auto cc = centralizer(g, as_vector(cs));
      CHECK(centralizer(g, as_vector(cc)) == cs);
      const auto h = generate_subgroup(g, s);
      const auto n = normalizer(g, h);
      CHECK(as_vector(n) == brute_normalizer(h));
      CHECK(h.is_subset_of(n));
    }
  }
}

TEST_CASE("element orders and involutions") {
  const auto s3 = symmetric(3);
  CHECK(element_order(*s3, 0) == 1);
  CHECK(element_order(*s3, s3->parse_element("(123)")) == 3);
  const auto q8 = quaternion8();
  CHECK(element_order(*q8, q8->parse_element("-1")) == 2);
  CHECK(involutions(*q8) == ids(q8, {"-1"}));
  CHECK(involutions(*cyclic(3)).empty());
  CHECK(involutions(*group_by_name("C2xC2")).size() == 3);
  CHECK(involutions(*symmetric(4)).size() == 9);
}

TEST_CASE("find_subgroup_conjugator") {
  const auto s4 = symmetric(4);
  const auto d8 = generate_subgroup(s4, ids(s4, {"(1234)", "(13)"}));
  CHECK(find_subgroup_conjugator(s4, d8, d8) == kIdentity);
  const auto other = generate_subgroup(s4, ids(s4, {"(1324)", "(12)"}));
  REQUIRE(other.order() == 8);
  REQUIRE(!(other == d8));
  const auto x = find_subgroup_conjugator(s4, d8, other);
  REQUIRE(x.has_value());
  CHECK(conjugate(d8, *x) == other);

  const auto v = group_by_name("C2xC2");
  const auto a = generate_subgroup(v, std::vector<ElementId>{1});
  const auto b = generate_subgroup(v, std::vector<ElementId>{2});
  CHECK_FALSE(find_subgroup_conjugator(v, a, b).has_value());
}

TEST_CASE("quotients") {
  const auto q8 = quaternion8();
  const auto z = generate_subgroup(q8, ids(q8, {"-1"}));
  const auto q = quotient(Subgroup::whole(q8), z);
  REQUIRE(q.carrier()->order() == 4);
  for (ElementId x = 1; x < 4; ++x) CHECK(element_order(*q.carrier(), x) == 2);
  for (ElementId x = 0; x < 4; ++x) CHECK(q.project(q.lift(x)) == x);
  CHECK(q.lift(0) == kIdentity);

  const auto s3 = symmetric(3);
  const auto t = generate_subgroup(s3, ids(s3, {"(12)"}));
  CHECK_THROWS_AS(quotient(Subgroup::whole(s3), t), NotNormal);
  CHECK(quotient(Subgroup::whole(s3), Subgroup::trivial(s3)).carrier()->order() == 6);

  // |N/D| * |D| = |N| and projection is a homomorphism.
  const auto s4 = symmetric(4);
  const auto v4 = generate_subgroup(s4, ids(s4, {"(12)(34)", "(13)(24)"}));
  const auto q2 = quotient(Subgroup::whole(s4), v4);
  CHECK(q2.carrier()->order() * v4.order() == 24);
  for (ElementId x = 0; x < 24; ++x)
    for (ElementId y = 0; y < 24; ++y)
      CHECK(q2.project(s4->multiply(x, y)) ==
            q2.carrier()->multiply(q2.project(x), q2.project(y)));
  // representatives are least elements of their cosets
  for (ElementId c = 0; c < q2.carrier()->order(); ++c)
    for (ElementId x = 0; x < q2.lift(c); ++x) CHECK(q2.project(x) != c);
}

TEST_CASE("centralizer dimension") {
  CHECK(centralizer_dimension(cyclic(12)) == 0);
  CHECK(centralizer_dimension(group_by_name("C2xC2xC2")) == 0);
  CHECK(centralizer_dimension(symmetric(3)) == 2);
  // Values from an independent brute-force chain search (see tools/oracles).
  CHECK(centralizer_dimension(alternating(4)) == 2);
  CHECK(centralizer_dimension(alternating(5)) == 2);
  CHECK(centralizer_dimension(alternating(6)) == 4);
  Limits tight;
  tight.max_centralizers = 3;
  CHECK_THROWS_AS(centralizer_dimension(symmetric(4), tight), ResourceLimit);
}

TEST_CASE("normalizer condition") {
  CHECK(check_normalizer_condition(quaternion8()));
  CHECK(check_normalizer_condition(dihedral(8)));
  CHECK_FALSE(check_normalizer_condition(symmetric(3)));
  for (const auto& name : corpus_names(64)) {
    const auto n = order_of_name(name);
    if (n & (n - 1)) continue;  // 2-groups only
    CAPTURE(name);
    CHECK(check_normalizer_condition(group_by_name(name)));
  }
  Limits tight;
  tight.max_subgroups = 2;
  CHECK_THROWS_AS(all_subgroups(symmetric(4), tight), ResourceLimit);
}
