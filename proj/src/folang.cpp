#include "sylowkit/folang.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "sylowkit/error.hpp"

namespace sylowkit::fo {

// ---------------------------------------------------------------------------
// AST

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::variable, std::move(name), {}, 0}));
}
Term Term::identity() { return Term(std::make_shared<const Node>(Node{Kind::identity, {}, {}, 0})); }
Term Term::product(Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(Node{Kind::product, {}, {std::move(lhs), std::move(rhs)}, 0}));
}
Term Term::power(Term base, long long exponent) {
  return Term(std::make_shared<const Node>(Node{Kind::power, {}, {std::move(base)}, exponent}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->exponent == b.node_->exponent && a.node_->children == b.node_->children;
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::forall, std::move(var), {std::move(body)}, {}}));
}
Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::exists, std::move(var), {std::move(body)}, {}}));
}
Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::conj, {}, {std::move(lhs), std::move(rhs)}, {}}));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::disj, {}, {std::move(lhs), std::move(rhs)}, {}}));
}
Formula Formula::negation(Formula body) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, {}, {std::move(body)}, {}}));
}
Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::implies, {}, {std::move(lhs), std::move(rhs)}, {}}));
}
Formula Formula::iff(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::iff, {}, {std::move(lhs), std::move(rhs)}, {}}));
}
Formula Formula::equal(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::equal, {}, {}, {std::move(lhs), std::move(rhs)}}));
}
Formula Formula::not_equal(Term lhs, Term rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::not_equal, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->var == b.node_->var &&
         a.node_->children == b.node_->children && a.node_->terms == b.node_->terms;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::variable:
      return t.name();
    case Term::Kind::identity:
      return "1";
    case Term::Kind::product: {
      std::string rhs = to_string(t.rhs());
      if (t.rhs().kind() == Term::Kind::product) rhs = "(" + rhs + ")";
      return to_string(t.lhs()) + "*" + rhs;
    }
    case Term::Kind::power: {
      std::string base = to_string(t.lhs());
      if (t.lhs().kind() == Term::Kind::product) base = "(" + base + ")";
      return base + "^" + std::to_string(t.exponent());
    }
  }
  return {};
}

namespace {

const char* connective(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::conj:
      return " & ";
    case Formula::Kind::disj:
      return " | ";
    case Formula::Kind::implies:
      return " -> ";
    default:
      return " <-> ";
  }
}

std::string operand(const Formula& f) {
  std::string s = to_string(f);
  return f.is_quantifier() ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::forall:
    case K::exists:
      return std::string(f.kind() == K::forall ? "A " : "E ") + f.var() + " . " + to_string(f.body());
    case K::negation:
      return f.body().is_atom() ? "!" + to_string(f.body()) : "!(" + to_string(f.body()) + ")";
    case K::conj:
    case K::disj:
    case K::implies:
    case K::iff:
      return "(" + operand(f.lhs()) + connective(f.kind()) + operand(f.rhs()) + ")";
    case K::equal:
      return to_string(f.left_term()) + " = " + to_string(f.right_term());
    case K::not_equal:
      return to_string(f.left_term()) + " != " + to_string(f.right_term());
  }
  return {};
}

// ---------------------------------------------------------------------------
// Analysis

namespace {

void collect_term_vars(const Term& t, std::vector<std::string>& bound, std::set<std::string>& free) {
  switch (t.kind()) {
    case Term::Kind::variable:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) free.insert(t.name());
      break;
    case Term::Kind::identity:
      break;
    case Term::Kind::product:
      collect_term_vars(t.lhs(), bound, free);
      collect_term_vars(t.rhs(), bound, free);
      break;
    case Term::Kind::power:
      collect_term_vars(t.lhs(), bound, free);
      break;
  }
}

void collect_vars(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& free) {
  if (f.is_quantifier()) {
    bound.push_back(f.var());
    collect_vars(f.body(), bound, free);
    bound.pop_back();
  } else if (f.is_atom()) {
    collect_term_vars(f.left_term(), bound, free);
    collect_term_vars(f.right_term(), bound, free);
  } else if (f.kind() == Formula::Kind::negation) {
    collect_vars(f.body(), bound, free);
  } else {
    collect_vars(f.lhs(), bound, free);
    collect_vars(f.rhs(), bound, free);
  }
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> free;
  collect_vars(f, bound, free);
  return {free.begin(), free.end()};
}

std::size_t quantifier_depth(const Formula& f) {
  if (f.is_quantifier()) return 1 + quantifier_depth(f.body());
  if (f.is_atom()) return 0;
  if (f.kind() == Formula::Kind::negation) return quantifier_depth(f.body());
  return std::max(quantifier_depth(f.lhs()), quantifier_depth(f.rhs()));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok {
  forall, exists, dot, var, one, integer, star, caret, minus, eq, neq,
  bang, amp, bar, arrow, dblarrow, lparen, rparen, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                              std::isdigit(static_cast<unsigned char>(s[j]))))
        ++j;
      out.push_back({Tok::var, std::string(s.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string digits(s.substr(i, j - i));
      out.push_back({digits == "1" ? Tok::one : Tok::integer, digits, pos});
      i = j;
      continue;
    }
    auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    if (starts("<->")) {
      out.push_back({Tok::dblarrow, "<->", pos});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::arrow, "->", pos});
      i += 2;
    } else if (starts("!=")) {
      out.push_back({Tok::neq, "!=", pos});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case 'A': kind = Tok::forall; break;
        case 'E': kind = Tok::exists; break;
        case '.': kind = Tok::dot; break;
        case '*': kind = Tok::star; break;
        case '^': kind = Tok::caret; break;
        case '-': kind = Tok::minus; break;
        case '=': kind = Tok::eq; break;
        case '!': kind = Tok::bang; break;
        case '&': kind = Tok::amp; break;
        case '|': kind = Tok::bar; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
      }
      out.push_back({kind, std::string(1, c), pos});
      ++i;
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse_sentence() {
    Formula f = formula();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "' after formula");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, peek().pos);
  }

  Formula formula() {
    if (peek().kind == Tok::forall || peek().kind == Tok::exists) return quantified();
    return iff();
  }

  Formula quantified() {
    const bool universal = peek().kind == Tok::forall;
    ++pos_;
    if (peek().kind != Tok::var) fail("expected variable after quantifier");
    std::string var = peek().text;
    ++pos_;
    expect(Tok::dot, "'.' after quantified variable");
    if (peek().kind == Tok::end) fail("missing quantifier body");
    Formula body = formula();
    return universal ? Formula::forall(std::move(var), std::move(body))
                     : Formula::exists(std::move(var), std::move(body));
  }

  Formula iff() {
    Formula lhs = implies();
    while (accept(Tok::dblarrow)) lhs = Formula::iff(std::move(lhs), rhs_operand(&Parser::implies));
    return lhs;
  }

  Formula implies() {
    Formula lhs = disj();
    if (accept(Tok::arrow)) return Formula::implies(std::move(lhs), rhs_operand(&Parser::implies));
    return lhs;
  }

  Formula disj() {
    Formula lhs = conj();
    while (accept(Tok::bar)) lhs = Formula::disj(std::move(lhs), rhs_operand(&Parser::conj));
    return lhs;
  }

  Formula conj() {
    Formula lhs = unary();
    while (accept(Tok::amp)) lhs = Formula::conj(std::move(lhs), rhs_operand(&Parser::unary));
    return lhs;
  }

  // A quantifier may open the right operand of any connective and then
  // swallows the rest of the input.
  Formula rhs_operand(Formula (Parser::*next)()) {
    if (peek().kind == Tok::forall || peek().kind == Tok::exists) return quantified();
    return (this->*next)();
  }

  Formula unary() {
    if (accept(Tok::bang)) return Formula::negation(rhs_operand(&Parser::unary));
    if (peek().kind == Tok::forall || peek().kind == Tok::exists) return quantified();
    if (peek().kind == Tok::lparen) {
      const std::size_t save = pos_;
      std::optional<SyntaxError> term_error;
      try {
        return atom();
      } catch (const SyntaxError& e) {
        term_error = e;
        pos_ = save;
      }
      try {
        ++pos_;
        Formula inner = formula();
        expect(Tok::rparen, "')'");
        return inner;
      } catch (const SyntaxError& e) {
        throw e.position() >= term_error->position() ? e : *term_error;
      }
    }
    if (peek().kind == Tok::end) fail("unexpected end of input");
    return atom();
  }

  Formula atom() {
    Term lhs = term();
    if (accept(Tok::eq)) return Formula::equal(std::move(lhs), term());
    if (accept(Tok::neq)) return Formula::not_equal(std::move(lhs), term());
    fail("expected '=' or '!='");
  }

  Term term() {
    Term lhs = factor();
    while (accept(Tok::star)) lhs = Term::product(std::move(lhs), factor());
    return lhs;
  }

  Term factor() {
    Term base = primary();
    while (accept(Tok::caret)) {
      const bool negative = accept(Tok::minus);
      if (peek().kind != Tok::integer && peek().kind != Tok::one) fail("expected integer exponent");
      if (peek().text.size() > 15) fail("exponent too large");
      long long e = std::stoll(peek().text);
      ++pos_;
      base = Term::power(std::move(base), negative ? -e : e);
    }
    return base;
  }

  Term primary() {
    if (peek().kind == Tok::var) {
      Term t = Term::variable(peek().text);
      ++pos_;
      return t;
    }
    if (accept(Tok::one)) return Term::identity();
    if (accept(Tok::lparen)) {
      Term t = term();
      expect(Tok::rparen, "')'");
      return t;
    }
    fail(peek().kind == Tok::end ? "unexpected end of input" : "expected term, found '" + peek().text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser parser(tokenize(text));
  Formula f = parser.parse_sentence();
  const auto free = free_variables(f);
  if (!free.empty()) throw UnboundVariable("unbound variable '" + free.front() + "'");
  return f;
}

Formula parse_formula_source(std::string_view source) {
  std::string cleaned;
  std::istringstream in{std::string(source)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    cleaned += line;
    cleaned += '\n';
  }
  return parse_formula(cleaned);
}

Formula load_formula_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open formula file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_formula_source(buffer.str());
}

// ---------------------------------------------------------------------------
// Negation normal form

namespace {

Formula nnf(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::forall:
    case K::exists: {
      const bool universal = (f.kind() == K::forall) != negated;
      Formula body = nnf(f.body(), negated);
      return universal ? Formula::forall(f.var(), std::move(body))
                       : Formula::exists(f.var(), std::move(body));
    }
    case K::conj:
      return negated ? Formula::disj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::conj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case K::disj:
      return negated ? Formula::conj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::disj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case K::negation:
      return nnf(f.body(), !negated);
    case K::implies:
      return negated ? Formula::conj(nnf(f.lhs(), false), nnf(f.rhs(), true))
                     : Formula::disj(nnf(f.lhs(), true), nnf(f.rhs(), false));
    case K::iff: {
      Formula same = Formula::conj(nnf(f.lhs(), false), nnf(f.rhs(), negated));
      Formula diff = Formula::conj(nnf(f.lhs(), true), nnf(f.rhs(), !negated));
      return Formula::disj(std::move(same), std::move(diff));
    }
    case K::equal:
      return negated ? Formula::not_equal(f.left_term(), f.right_term()) : f;
    case K::not_equal:
      return negated ? Formula::equal(f.left_term(), f.right_term()) : f;
  }
  return f;
}

}  // namespace

Formula negation_normal_form(const Formula& f) { return nnf(f, false); }

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Formula compiled to slot-indexed nodes.
struct CTerm {
  Term::Kind kind;
  int slot = -1;
  long long exponent = 0;
  int a = -1, b = -1;
};

struct CForm {
  Formula::Kind kind;
  int slot = -1;
  int a = -1, b = -1;    // sub-formulas
  int ta = -1, tb = -1;  // terms
  bool closes_block = false;
};

class Evaluator {
 public:
  Evaluator(const FiniteGroup& group, const Formula& f, std::uint64_t budget)
      : group_(group), budget_(budget) {
    root_ = compile(f);
    // Outermost block of like quantifiers.
    int node = root_;
    if (forms_[node].kind == Formula::Kind::forall || forms_[node].kind == Formula::Kind::exists) {
      block_kind_ = forms_[node].kind;
      while (forms_[node].kind == *block_kind_) {
        block_slots_.push_back(forms_[node].slot);
        block_names_.push_back(slot_names_[forms_[node].slot]);
        if (forms_[forms_[node].a].kind != *block_kind_) break;
        node = forms_[node].a;
      }
      forms_[node].closes_block = true;
    }
    slots_.assign(slot_names_.size(), kIdentity);
  }

  bool run() { return eval(root_); }
  std::uint64_t bindings() const { return bindings_; }
  const std::optional<Assignment>& decisive() const { return decisive_; }
  std::optional<Formula::Kind> block_kind() const { return block_kind_; }

 private:
  int compile_term(const Term& t) {
    CTerm c{t.kind()};
    switch (t.kind()) {
      case Term::Kind::variable: {
        auto it = std::find_if(scope_.rbegin(), scope_.rend(),
                               [&](const auto& s) { return s.first == t.name(); });
        if (it == scope_.rend())
          throw PreconditionViolation("free variable '" + t.name() + "' in evaluated formula");
        c.slot = it->second;
        break;
      }
      case Term::Kind::identity:
        break;
      case Term::Kind::product:
        c.a = compile_term(t.lhs());
        c.b = compile_term(t.rhs());
        break;
      case Term::Kind::power:
        c.a = compile_term(t.lhs());
        c.exponent = t.exponent();
        break;
    }
    terms_.push_back(c);
    return static_cast<int>(terms_.size()) - 1;
  }

  int compile(const Formula& f) {
    CForm c{f.kind()};
    if (f.is_quantifier()) {
      c.slot = static_cast<int>(slot_names_.size());
      slot_names_.push_back(f.var());
      scope_.emplace_back(f.var(), c.slot);
      c.a = compile(f.body());
      scope_.pop_back();
    } else if (f.is_atom()) {
      c.ta = compile_term(f.left_term());
      c.tb = compile_term(f.right_term());
    } else if (f.kind() == Formula::Kind::negation) {
      c.a = compile(f.body());
    } else {
      c.a = compile(f.lhs());
      c.b = compile(f.rhs());
    }
    forms_.push_back(c);
    return static_cast<int>(forms_.size()) - 1;
  }

  ElementId term_value(int index) const {
    const CTerm& t = terms_[index];
    switch (t.kind) {
      case Term::Kind::variable:
        return slots_[t.slot];
      case Term::Kind::identity:
        return kIdentity;
      case Term::Kind::product:
        return group_.multiply(term_value(t.a), term_value(t.b));
      case Term::Kind::power:
        return group_.power(term_value(t.a), t.exponent);
    }
    return kIdentity;
  }

  bool eval(int index) {
    const CForm& f = forms_[index];
    using K = Formula::Kind;
    switch (f.kind) {
      case K::forall:
      case K::exists: {
        const bool universal = f.kind == K::forall;
        for (ElementId v = 0; v < group_.order(); ++v) {
          if (++bindings_ > budget_)
            throw ResourceLimit("quantifier budget of " + std::to_string(budget_) +
                                " bindings exhausted on " + group_.label());
          slots_[f.slot] = v;
          const bool r = eval(f.a);
          if (r != universal) {
            if (f.closes_block && !decisive_) {
              Assignment a;
              for (std::size_t k = 0; k < block_slots_.size(); ++k)
                a.emplace_back(block_names_[k], slots_[block_slots_[k]]);
              decisive_ = std::move(a);
            }
            return !universal;
          }
        }
        return universal;
      }
      case K::conj:
        return eval(f.a) && eval(f.b);
      case K::disj:
        return eval(f.a) || eval(f.b);
      case K::negation:
        return !eval(f.a);
      case K::implies:
        return !eval(f.a) || eval(f.b);
      case K::iff:
        return eval(f.a) == eval(f.b);
      case K::equal:
        return term_value(f.ta) == term_value(f.tb);
      case K::not_equal:
        return term_value(f.ta) != term_value(f.tb);
    }
    return false;
  }

  const FiniteGroup& group_;
  std::uint64_t budget_;
  std::uint64_t bindings_ = 0;
  std::vector<CTerm> terms_;
  std::vector<CForm> forms_;
  std::vector<std::string> slot_names_;
  std::vector<std::pair<std::string, int>> scope_;
  std::vector<ElementId> slots_;
  int root_ = -1;
  std::optional<Formula::Kind> block_kind_;
  std::vector<int> block_slots_;
  std::vector<std::string> block_names_;
  std::optional<Assignment> decisive_;
};

}  // namespace

EvalReport evaluate(const GroupPtr& group, const Formula& f, const EvalOptions& options,
                    std::string sentence_name) {
  const auto start = std::chrono::steady_clock::now();
  Evaluator ev(*group, f, options.budget);
  EvalReport report;
  report.group_label = group->label();
  report.sentence_name = std::move(sentence_name);
  report.sentence_text = to_string(f);
  report.truth = ev.run();
  report.bindings_tried = ev.bindings();
  if (ev.block_kind() == Formula::Kind::forall && !report.truth)
    report.counterexample = ev.decisive();
  if (ev.block_kind() == Formula::Kind::exists && report.truth) report.witness = ev.decisive();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Built-in sentences

std::string centralizer_chain_text(unsigned length) {
  if (length == 0) return "1 = 1";
  std::string inner;
  for (unsigned k = length; k >= 1; --k) {
    const std::string x = "x" + std::to_string(k), y = "y" + std::to_string(k);
    std::string cond;
    for (unsigned i = 1; i < k; ++i) {
      const std::string xi = "x" + std::to_string(i);
      cond += y + "*" + xi + " = " + xi + "*" + y + " & ";
    }
    cond += x + "*" + y + " != " + y + "*" + x;
    if (!inner.empty()) cond += " & " + inner;
    inner = "E " + x + " . E " + y + " . (" + cond + ")";
  }
  return inner;
}

std::optional<std::string> builtin_sentence_text(std::string_view name) {
  if (name == "dichotomy")
    return "A g . A h . ((g != 1 & h != 1 & g^2 = 1 & h^2 = 1) -> "
           "((E x . x*g*x^-1 = h) | (E y . y != 1 & y^2 = 1 & y*g*y^-1 = g & y*h*y^-1 = h)))";
  if (name == "doubling") return "(A x . A y . (x^2 = y^2 -> x = y)) <-> (A z . E w . w^2 = z)";
  constexpr std::string_view prefix = "cdim_le(";
  if (name.substr(0, prefix.size()) == prefix && name.size() == prefix.size() + 2 &&
      name.back() == ')' && std::isdigit(static_cast<unsigned char>(name[prefix.size()]))) {
    const unsigned c = static_cast<unsigned>(name[prefix.size()] - '0');
    if (c > 4) return std::nullopt;
    return "!(" + centralizer_chain_text(c + 1) + ")";
  }
  return std::nullopt;
}

std::map<std::string, Formula> builtin_sentences() {
  std::map<std::string, Formula> out;
  for (std::string name : {"dichotomy", "doubling", "cdim_le(0)", "cdim_le(1)", "cdim_le(2)",
                           "cdim_le(3)", "cdim_le(4)"})
    out.emplace(name, parse_formula(*builtin_sentence_text(name)));
  return out;
}

}  // namespace sylowkit::fo
