#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sylowkit/group.hpp"

namespace sylowkit::fo {

// First-order sentences in the language of groups.
//
// Concrete grammar (loosest binding first):
//   formula := 'A' var '.' formula | 'E' var '.' formula | iff
//   iff     := implies ('<->' implies)*          left associative
//   implies := or ('->' implies)?                right associative
//   or      := and ('|' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | quantified | '(' formula ')' | term ('=' | '!=') term
//   term    := factor ('*' factor)*
//   factor  := atom ('^' ['-'] digits)*
//   atom    := var | '1' | '(' term ')'
//   var     := [a-z][a-z0-9]*
// A quantifier body extends as far to the right as possible.

class Term {
 public:
  enum class Kind { variable, identity, product, power };

  static Term variable(std::string name);
  static Term identity();
  static Term product(Term lhs, Term rhs);
  static Term power(Term base, long long exponent);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Term& lhs() const { return node_->children[0]; }
  const Term& rhs() const { return node_->children[1]; }
  long long exponent() const { return node_->exponent; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> children;
    long long exponent = 0;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Formula {
 public:
  enum class Kind { forall, exists, conj, disj, negation, implies, iff, equal, not_equal };

  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula negation(Formula body);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula equal(Term lhs, Term rhs);
  static Formula not_equal(Term lhs, Term rhs);

  Kind kind() const { return node_->kind; }
  bool is_quantifier() const { return kind() == Kind::forall || kind() == Kind::exists; }
  bool is_atom() const { return kind() == Kind::equal || kind() == Kind::not_equal; }
  /// Bound variable of a quantifier.
  const std::string& var() const { return node_->var; }
  /// Quantifier / negation body, or left operand of a binary connective.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  const Formula& body() const { return node_->children[0]; }
  const Term& left_term() const { return node_->terms[0]; }
  const Term& right_term() const { return node_->terms[1]; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string var;
    std::vector<Formula> children;
    std::vector<Term> terms;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Term& t);
/// Canonical text; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

std::vector<std::string> free_variables(const Formula& f);
/// Number of nested quantifiers along the deepest path.
std::size_t quantifier_depth(const Formula& f);

/// Throws SyntaxError (with byte position) or UnboundVariable.
Formula parse_formula(std::string_view text);

/// Strips '#' comments and parses the remaining text as one sentence.
Formula parse_formula_source(std::string_view source);
Formula load_formula_file(const std::string& path);

/// Pushes negations down to atoms, eliminating -> and <->. The result is
/// logically equivalent (and evaluates identically on every group).
Formula negation_normal_form(const Formula& f);

using Assignment = std::vector<std::pair<std::string, ElementId>>;

struct EvalOptions {
  /// Maximum number of quantifier instances (variable bindings) tried.
  std::uint64_t budget = 100'000'000;
};

struct EvalReport {
  std::string group_label;
  std::string sentence_name;
  std::string sentence_text;
  bool truth = false;
  /// Least-id witness of a true outermost existential block.
  std::optional<Assignment> witness;
  /// Least-id counterexample of a false outermost universal block.
  std::optional<Assignment> counterexample;
  std::uint64_t bindings_tried = 0;
  double elapsed_seconds = 0;
};

/// Exhaustive evaluation with short-circuiting. Throws PreconditionViolation
/// for formulas with free variables and ResourceLimit when the budget is
/// exhausted.
EvalReport evaluate(const GroupPtr& group, const Formula& f, const EvalOptions& options = {},
                    std::string sentence_name = {});

/// Text of a built-in sentence: "dichotomy", "doubling", "cdim_le(c)".
std::optional<std::string> builtin_sentence_text(std::string_view name);
/// {cdim_le(0..4), dichotomy, doubling}.
std::map<std::string, Formula> builtin_sentences();

/// "There is a strict centralizer chain G > C(x1) > C(x1,x2) > ... of
/// length n", with witnesses y_k in C(x1..x_{k-1}) not commuting with x_k.
std::string centralizer_chain_text(unsigned length);

}  // namespace sylowkit::fo
