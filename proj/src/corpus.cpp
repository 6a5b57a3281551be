#include "sylowkit/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "sylowkit/error.hpp"

namespace sylowkit {

namespace {

std::string power_name(const char* base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return std::string(base) + "^" + std::to_string(k);
}

const std::array<const char*, 29> kProducts = {
    "C2xC2",   "C2xC2xC2", "C4xC2",   "C2xC2xC2xC2", "C4xC4",   "D8xC2",
    "Q8xC2",   "S3xC2",    "S3xC3",   "C6xC6",       "S3xS3",   "A4xC2",
    "S4xC2",   "D8xC3",    "Q8xC3",   "D10xC2",      "A5xC2",   "D8xD8",
    "Q8xQ8",   "S3xC4",    "A4xC3",   "D12xC2",      "Q8xS3",   "S4xC3",
    "S3xS3xC2", "A4xA4",   "S4xS3",   "D8xS3",       "D8xQ8",
};

struct Factor {
  char kind;
  std::size_t n;
};

std::vector<Factor> parse_name(std::string_view name) {
  std::vector<Factor> factors;
  std::size_t i = 0;
  auto fail = [&]() -> std::vector<Factor> {
    throw UnknownGroup("unknown group name '" + std::string(name) + "'; expected " +
                       std::string(kGroupNameGrammar));
  };
  while (true) {
    if (i >= name.size()) return fail();
    const char kind = name[i++];
    if (kind != 'C' && kind != 'D' && kind != 'S' && kind != 'A' && kind != 'Q') return fail();
    std::size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i || j - i > 6) return fail();
    const std::size_t n = std::stoul(std::string(name.substr(i, j - i)));
    if (n == 0) return fail();
    if (kind == 'Q' && n != 8) return fail();
    if (kind == 'D' && (n % 2 != 0)) return fail();
    if ((kind == 'S' || kind == 'A') && n > 9) return fail();
    factors.push_back({kind, n});
    i = j;
    if (i == name.size()) break;
    if (name[i] != 'x') return fail();
    ++i;
  }
  return factors;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::size_t factor_order(const Factor& f) {
  switch (f.kind) {
    case 'C':
    case 'D':
    case 'Q':
      return f.n;
    case 'S':
      return factorial(f.n);
    default:
      return f.n <= 2 ? 1 : factorial(f.n) / 2;
  }
}

GroupPtr build_factor(const Factor& f) {
  switch (f.kind) {
    case 'C':
      return cyclic(f.n);
    case 'D':
      return dihedral(f.n);
    case 'Q':
      return quaternion8();
    case 'S':
      return symmetric(f.n);
    default:
      return alternating(f.n);
  }
}

Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

bool is_even(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
  if (n == 0) throw PreconditionViolation("cyclic group of order 0");
  std::vector<ElementId> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "1" : power_name("a", a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<ElementId>((a + b) % n);
  }
  return FiniteGroup::from_table("C" + std::to_string(n), n, std::move(table), std::move(names));
}

GroupPtr dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw PreconditionViolation("dihedral order must be even and positive");
  const std::size_t m = order / 2;
  // id = e*m + k  <->  r^k s^e, with s r = r^-1 s.
  std::vector<ElementId> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t e1 = x / m, k1 = x % m;
    const std::string rot = power_name("r", k1);
    names[x] = e1 == 0 ? (k1 == 0 ? "1" : rot) : rot + "s";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t e2 = y / m, k2 = y % m;
      const std::size_t k = e1 == 0 ? (k1 + k2) % m : (k1 + m - k2) % m;
      table[x * order + y] = static_cast<ElementId>(((e1 + e2) % 2) * m + k);
    }
  }
  return FiniteGroup::from_table("D" + std::to_string(order), order, std::move(table),
                                 std::move(names));
}

GroupPtr symmetric(std::size_t n) {
  if (n == 0) throw PreconditionViolation("symmetric group of degree 0");
  std::vector<Permutation> elements;
  Permutation p = identity_perm(n);
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t = identity_perm(n);
    std::swap(t[0], t[1]);
    gens.push_back(t);
    Permutation c(n);
    for (std::size_t x = 0; x < n; ++x) c[x] = static_cast<std::uint16_t>((x + 1) % n);
    if (n > 2) gens.push_back(c);
  }
  return FiniteGroup::from_elements("S" + std::to_string(n), n, std::move(gens),
                                    std::move(elements));
}

GroupPtr alternating(std::size_t n) {
  if (n == 0) throw PreconditionViolation("alternating group of degree 0");
  std::vector<Permutation> elements;
  Permutation p = identity_perm(n);
  do {
    if (is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    Permutation c = identity_perm(n);  // (1 2 k+1)
    c[0] = 1;
    c[1] = static_cast<std::uint16_t>(k);
    c[k] = 0;
    gens.push_back(c);
  }
  return FiniteGroup::from_elements("A" + std::to_string(n), n, std::move(gens),
                                    std::move(elements));
}

GroupPtr quaternion8() {
  // id = 2*unit + sign, units 1,i,j,k; sign 0 is +.
  static constexpr int kUnitProduct[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSignProduct[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::array<const char*, 8> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<ElementId> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = kUnitProduct[x / 2][y / 2];
      const int s = (x % 2 + y % 2 + kSignProduct[x / 2][y / 2]) % 2;
      table[x * 8 + y] = static_cast<ElementId>(2 * u + s);
    }
  return FiniteGroup::from_table("Q8", 8, std::move(table),
                                 std::vector<std::string>(names.begin(), names.end()));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t n = g->order() * h->order();
  if (n > 8192) throw ResourceLimit("direct product too large for a Cayley table");
  const std::size_t m = h->order();
  std::vector<ElementId> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto gx = static_cast<ElementId>(x / m), hx = static_cast<ElementId>(x % m);
    names[x] = "(" + g->element_name(gx) + "," + h->element_name(hx) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto gy = static_cast<ElementId>(y / m), hy = static_cast<ElementId>(y % m);
      table[x * n + y] = static_cast<ElementId>(g->multiply(gx, gy) * m + h->multiply(hx, hy));
    }
  }
  return FiniteGroup::from_table(g->label() + "x" + h->label(), n, std::move(table),
                                 std::move(names));
}

GroupPtr group_by_name(std::string_view name) {
  const auto factors = parse_name(name);
  GroupPtr g = build_factor(factors[0]);
  for (std::size_t k = 1; k < factors.size(); ++k) g = direct_product(g, build_factor(factors[k]));
  return g;
}

std::size_t order_of_name(std::string_view name) {
  std::size_t n = 1;
  for (const auto& f : parse_name(name)) n *= factor_order(f);
  return n;
}

std::vector<std::string> corpus_names(std::size_t max_order) {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= max_order; ++n) names.push_back("C" + std::to_string(n));
  for (std::size_t n = 4; n <= max_order; n += 2) names.push_back("D" + std::to_string(n));
  if (max_order >= 8) names.push_back("Q8");
  for (std::size_t n = 3; n <= 5; ++n)
    if (factorial(n) <= max_order) names.push_back("S" + std::to_string(n));
  for (std::size_t n = 4; n <= 5; ++n)
    if (factorial(n) / 2 <= max_order) names.push_back("A" + std::to_string(n));
  for (const char* p : kProducts)
    if (order_of_name(p) <= max_order) names.emplace_back(p);
  return names;
}

}  // namespace sylowkit
