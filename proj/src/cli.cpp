#include "sylowkit/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylowkit/corpus.hpp"
#include "sylowkit/error.hpp"
#include "sylowkit/escalation.hpp"
#include "sylowkit/folang.hpp"
#include "sylowkit/padic.hpp"
#include "sylowkit/platonov.hpp"
#include "sylowkit/sylow.hpp"

namespace sylowkit::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

constexpr const char* kUsageText =
    "usage: sylowkit [--json] [--seed S] [--budget N] COMMAND [options]\n"
    "commands:\n"
    "  dichotomy --max-order N | --group NAME\n"
    "  conjugator --group NAME [--p 2] [--all-pairs]\n"
    "  sylow --group NAME --p P\n"
    "  platonov --primes LIST | --count K [--pairs all|consecutive|none] [--samples N]\n"
    "  valuation-lemma --p P [--samples N] [--seed S]\n"
    "  sl2q-properties [--samples N]\n"
    "  fo-check --group NAME (--builtin NAME | --formula-file PATH)\n"
    "  centralizer-dim --group NAME\n";

// Bad input from the command line; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  std::string status;  // pass | fail | error
  std::string summary;
  json evidence = json::object();
};

struct Report {
  std::string command;
  json parameters = json::object();
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string summary, json evidence = json::object()) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(summary),
                      std::move(evidence)});
  }
  void add_error(std::string name, const Error& e) {
    checks.push_back({std::move(name), "error", e.what(), {{"kind", e.kind()}}});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status == "pass"; });
  }
};

struct Globals {
  bool json_output = false;
  std::uint64_t seed = Rng::kDefaultSeed;
  std::uint64_t budget = fo::EvalOptions{}.budget;
};

GroupPtr load_group(const std::string& name) {
  try {
    return group_by_name(name);
  } catch (const UnknownGroup& e) {
    throw UsageError(e.what());  // the message already carries the grammar
  }
}

std::string names_of(const FiniteGroup& g, const fo::Assignment& a) {
  std::string out;
  for (const auto& [var, id] : a) {
    if (!out.empty()) out += ", ";
    out += var + " = " + g.element_name(id);
  }
  return out;
}

json assignment_json(const FiniteGroup& g, const fo::Assignment& a) {
  json out = json::array();
  for (const auto& [var, id] : a)
    out.push_back({{"variable", var}, {"id", id}, {"element", g.element_name(id)}});
  return out;
}

json subgroup_json(const FiniteGroup& g, const Subgroup& s) {
  json members = json::array();
  for (ElementId x : s.members()) members.push_back(g.element_name(x));
  return {{"order", s.order()}, {"members", members}};
}

// ---------------------------------------------------------------------------

void cmd_dichotomy(Report& r, const Globals& gl, std::optional<std::size_t> max_order,
                   std::optional<std::string> group) {
  std::vector<std::string> names;
  if (group) {
    load_group(*group);
    names.push_back(*group);
    r.parameters["group"] = *group;
  } else {
    names = corpus_names(*max_order);
    r.parameters["max_order"] = *max_order;
  }
  const fo::Formula sentence = fo::parse_formula(*fo::builtin_sentence_text("dichotomy"));
  for (const auto& name : names) {
    const GroupPtr g = load_group(name);
    try {
      const DichotomyReport direct = check_involution_dichotomy(g);
      const fo::EvalReport fo = fo::evaluate(g, sentence, {gl.budget}, "dichotomy");
      const bool direct_ok = direct.failures.empty();
      json failures = json::array();
      for (const auto& [x, y] : direct.failures)
        failures.push_back({g->element_name(x), g->element_name(y)});
      json ev = {{"involutions", direct.involution_count},
                 {"pairs", direct.entries.size()},
                 {"conjugate_pairs", direct.conjugate_pairs()},
                 {"commuting_pairs", direct.commuting_pairs()},
                 {"failures", failures},
                 {"fo_truth", fo.truth},
                 {"fo_bindings", fo.bindings_tried}};
      if (fo.counterexample) ev["fo_counterexample"] = assignment_json(*g, *fo.counterexample);
      std::ostringstream s;
      s << direct.involution_count << " involutions, " << direct.entries.size() << " pairs ("
        << direct.conjugate_pairs() << " conjugate), " << direct.failures.size()
        << " failing; first-order " << (fo.truth ? "true" : "false");
      if (direct_ok != fo.truth) s << "; implementations DISAGREE";
      r.add(name, direct_ok && fo.truth, s.str(), ev);
    } catch (const ResourceLimit&) {
      throw;
    } catch (const Error& e) {
      r.add_error(name, e);
    }
  }
}

json trace_json(const FiniteGroup& g, const ConjugatorTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json legs = json::array();
    for (const auto& leg : s.produced) legs.push_back(leg.intersection_order);
    json step = {{"kind", to_string(s.kind)},
                 {"d_order", s.d_order},
                 {"i", g.element_name(s.i_lift)},
                 {"j", g.element_name(s.j_lift)},
                 {"leg_intersection_orders", legs}};
    if (s.k_lift) step["k"] = g.element_name(*s.k_lift);
    if (s.conjugator_fragment) step["fragment"] = g.element_name(*s.conjugator_fragment);
    if (s.parent) {
      step["parent"] = *s.parent;
      step["parent_leg"] = s.parent_leg;
    }
    steps.push_back(step);
  }
  return {{"conjugator", g.element_name(t.conjugator)}, {"rounds", t.rounds}, {"steps", steps}};
}

void cmd_conjugator(Report& r, const std::string& name, std::uint64_t p, bool all_pairs) {
  if (p != 2) throw UsageError("conjugator: only --p 2 is supported (the escalation is for 2-groups)");
  const GroupPtr g = load_group(name);
  r.parameters = {{"group", name}, {"p", p}, {"all_pairs", all_pairs}};
  const auto sylows = all_sylow_p(g, 2);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sylows.size(); ++i)
    for (std::size_t j = 0; j < sylows.size(); ++j)
      if (i != j && (all_pairs || pairs.empty())) pairs.emplace_back(i, j);
  if (pairs.empty()) {
    r.add("sylow-2 subgroups", true,
          "unique Sylow 2-subgroup of order " + std::to_string(sylows.front().order()) +
              "; nothing to conjugate",
          {{"count", sylows.size()}});
    return;
  }
  for (const auto& [i, j] : pairs) {
    const std::string label = "P" + std::to_string(i) + " -> P" + std::to_string(j);
    try {
      const ConjugatorTrace t = find_conjugator(g, sylows[i], sylows[j]);
      const bool verified = conjugate(sylows[i], t.conjugator) == sylows[j];
      const bool monotone = trace_is_monotone(t);
      const bool oracle = find_subgroup_conjugator(g, sylows[i], sylows[j]).has_value();
      json ev = trace_json(*g, t);
      ev["from"] = subgroup_json(*g, sylows[i]);
      ev["to"] = subgroup_json(*g, sylows[j]);
      ev["verified"] = verified;
      ev["monotone"] = monotone;
      ev["oracle_agrees"] = oracle;
      r.add(label, verified && monotone && oracle,
            "conjugator " + g->element_name(t.conjugator) + " after " +
                std::to_string(t.steps.size()) + " steps",
            ev);
    } catch (const ResourceLimit&) {
      throw;
    } catch (const Error& e) {
      r.add_error(label, e);
    }
  }
}

void cmd_sylow(Report& r, const std::string& name, std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("sylow: --p must be prime, got " + std::to_string(p));
  const GroupPtr g = load_group(name);
  r.parameters = {{"group", name}, {"p", p}};
  try {
    const SylowReport s = verify_sylow_theorems(g, p);
    json ev = {{"sylow_order", s.sylow_order},
               {"count", s.count},
               {"count_mod_p", s.count_mod_p},
               {"all_conjugate", s.all_conjugate}};
    ev["exhaustive_agrees"] = s.exhaustive_agrees ? json(*s.exhaustive_agrees) : json(nullptr);
    const bool ok = s.all_conjugate && s.count_mod_p == 1 && s.exhaustive_agrees.value_or(true);
    std::ostringstream m;
    m << s.count << " Sylow " << p << "-subgroups of order " << s.sylow_order << ", count mod p = "
      << s.count_mod_p << (s.all_conjugate ? ", all conjugate" : ", NOT all conjugate");
    if (s.exhaustive_agrees)
      m << (*s.exhaustive_agrees ? ", exhaustive oracle agrees" : ", exhaustive oracle DISAGREES");
    r.add("sylow theorems", ok, m.str(), ev);
  } catch (const ResourceLimit&) {
    throw;
  } catch (const Error& e) {
    r.add_error("sylow theorems", e);
  }
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("platonov: bad prime list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("platonov: empty prime list");
  return out;
}

void cmd_platonov(Report& r, Rng& rng, std::optional<std::string> primes_text,
                  std::optional<std::size_t> count, const std::string& pairs_mode,
                  std::size_t samples) {
  const std::vector<std::uint64_t> primes =
      primes_text ? parse_prime_list(*primes_text) : platonov::primes_3_mod_4(*count);
  r.parameters = {{"primes", primes}, {"pairs", pairs_mode}, {"samples", samples}};
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (primes[i] == primes[j]) throw UsageError("platonov: duplicate prime " + std::to_string(primes[i]));

  std::vector<platonov::Generator> gens;
  for (auto p : primes) {
    try {
      gens.push_back(platonov::generator(p));
    } catch (const BadPrime& e) {
      throw UsageError(std::string("platonov: ") + e.what());
    }
    const auto& g = gens.back();
    r.add("generator p=" + std::to_string(p),
          g.matrix.det() == 1 && g.square == Mat2::scalar(-1) && g.order == 4,
          "g = " + to_string(g.matrix) + ", det 1, g^2 = -I, order " + std::to_string(g.order),
          platonov::to_json(g));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (pairs_mode == "all") {
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = i + 1; j < primes.size(); ++j) pairs.emplace_back(i, j);
  } else if (pairs_mode == "consecutive") {
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) pairs.emplace_back(i, i + 1);
  }
  for (const auto& [i, j] : pairs) {
    const std::string label =
        "pair (" + std::to_string(primes[i]) + ", " + std::to_string(primes[j]) + ")";
    const auto cert = platonov::nonconjugacy_certificate(primes[i], primes[j], rng, samples);
    json ev = platonov::to_json(cert);
    // Re-verify from the serialized form.
    const auto failures = platonov::verify_certificate(platonov::certificate_from_json(ev));
    ev["reverification_failures"] = failures;
    r.add(label, cert.refuted() && failures.empty(),
          "case 1: " + cert.case1.final_equation.to_string() + " (parity); case 2: " +
              cert.case2.final_equation.to_string() + " (sign); " +
              std::to_string(cert.conjugating_samples) + "/" +
              std::to_string(cert.sampled_conjugators) + " sampled conjugators",
          ev);
  }
}

void cmd_valuation(Report& r, Rng& rng, std::uint64_t p, std::size_t samples) {
  if (!is_prime(p)) throw UsageError("valuation-lemma: --p must be prime, got " + std::to_string(p));
  r.parameters = {{"p", p}, {"samples", samples}};
  try {
    const auto c = valuation_parity_certificate(p, samples, rng);
    json ev = {{"claim", c.claim},
               {"hypothesis_holds", c.hypothesis_holds},
               {"samples", c.samples},
               {"even", c.even_count},
               {"odd", c.odd_count}};
    if (c.first_odd_witness)
      ev["odd_witness"] = {to_string(c.first_odd_witness->first),
                           to_string(c.first_odd_witness->second)};
    json traces = json::array();
    for (const auto& [ab, red] : c.sample_traces)
      traces.push_back({{"alpha", to_string(ab.first)},
                        {"beta", to_string(ab.second)},
                        {"p_squared_strips", red.p_squared_strips},
                        {"residual", {red.residual_re.get_str(), red.residual_im.get_str()}},
                        {"residual_valuation", red.residual_valuation}});
    ev["sample_traces"] = traces;
    if (c.hypothesis_holds) {
      r.add("parity", c.odd_count == 0,
            std::to_string(c.even_count) + "/" + std::to_string(c.samples) + " even valuations",
            ev);
    } else {
      // Outside the hypothesis the claim should fail; a witness shows the
      // congruence condition is needed.
      r.add("parity (hypothesis fails)", c.odd_count > 0,
            c.first_odd_witness ? "odd witness (" + to_string(c.first_odd_witness->first) + ", " +
                                      to_string(c.first_odd_witness->second) + ")"
                                : "no odd witness found",
            ev);
    }
  } catch (const ParityViolation& e) {
    r.add_error("parity", e);
  }
}

void cmd_sl2q(Report& r, Rng& rng, std::size_t samples) {
  r.parameters = {{"samples", samples}};
  const auto o8 = platonov::order8_impossibility(rng, samples);
  std::string hist;
  for (const auto& [o, n] : o8.order_histogram)
    hist += (hist.empty() ? "" : ", ") + std::to_string(o) + ":" + std::to_string(n);
  r.add("order-8 impossibility", o8.passed,
        o8.trace_condition.to_string({"t", "u", "v", "w"}) +
            " has no rational root (v2 parity); sampled orders {" + hist + "}",
        platonov::to_json(o8));
  const auto q8 = platonov::q8_embedding_refutation(rng, samples);
  r.add("Q8 embedding", q8.passed,
        q8.contradiction.to_string() + (q8.unsatisfiable ? " unsatisfiable" : " NOT refuted"),
        platonov::to_json(q8));
  r.add("unique involution", o8.only_minus_identity,
        std::to_string(o8.involutions_classified) + " sampled involutions, all -I");
  const auto sc = platonov::sylow_certificate(3, rng, samples);
  r.add("sylow certificate p=3", sc.passed,
        "|<g_3>| = " + std::to_string(sc.subgroup_order) + "; maximality cited, not verified",
        platonov::to_json(sc));
}

void cmd_fo(Report& r, const Globals& gl, const std::string& name,
            std::optional<std::string> builtin, std::optional<std::string> file) {
  const GroupPtr g = load_group(name);
  std::optional<fo::Formula> f;
  std::string sentence_name;
  try {
    if (builtin) {
      const auto text = fo::builtin_sentence_text(*builtin);
      if (!text)
        throw UsageError("fo-check: unknown builtin '" + *builtin +
                         "' (dichotomy, doubling, cdim_le(c))");
      f = fo::parse_formula(*text);
      sentence_name = *builtin;
    } else {
      f = fo::load_formula_file(*file);
      sentence_name = *file;
    }
  } catch (const SyntaxError& e) {
    throw UsageError(std::string("fo-check: ") + e.what());
  } catch (const UnboundVariable& e) {
    throw UsageError(std::string("fo-check: ") + e.what());
  } catch (const ParseError& e) {
    throw UsageError(std::string("fo-check: ") + e.what());
  }
  r.parameters = {{"group", name}, {"sentence", sentence_name}, {"budget", gl.budget}};
  const auto rep = fo::evaluate(g, *f, {gl.budget}, sentence_name);
  json ev = {{"sentence", rep.sentence_text}, {"truth", rep.truth},
             {"bindings", rep.bindings_tried}};
  std::string summary = rep.truth ? "true" : "false";
  if (rep.witness) {
    ev["witness"] = assignment_json(*g, *rep.witness);
    summary += "; witness " + names_of(*g, *rep.witness);
  }
  if (rep.counterexample) {
    ev["counterexample"] = assignment_json(*g, *rep.counterexample);
    summary += "; counterexample " + names_of(*g, *rep.counterexample);
  }
  r.add(sentence_name + " on " + name, rep.truth, summary, ev);
}

void cmd_cdim(Report& r, const Globals& gl, const std::string& name) {
  const GroupPtr g = load_group(name);
  r.parameters = {{"group", name}};
  const std::size_t c = centralizer_dimension(g);
  json ev = {{"order", g->order()}, {"centralizer_dimension", c}};
  std::string summary = "centralizer dimension " + std::to_string(c);
  bool ok = true;
  // Cross-check against the first-order sentences when cheap enough.
  if (c <= 4) {
    try {
      const fo::EvalOptions opts{std::min<std::uint64_t>(gl.budget, 10'000'000)};
      const auto at = fo::evaluate(g, fo::parse_formula(*fo::builtin_sentence_text(
                                          "cdim_le(" + std::to_string(c) + ")")), opts);
      bool below = false;
      if (c > 0)
        below = fo::evaluate(g, fo::parse_formula(*fo::builtin_sentence_text(
                                    "cdim_le(" + std::to_string(c - 1) + ")")), opts)
                    .truth;
      ok = at.truth && !below;
      ev["fo_cross_check"] = ok ? "agrees" : "DISAGREES";
      summary += ok ? "; first-order cdim_le agrees" : "; first-order cdim_le DISAGREES";
    } catch (const ResourceLimit&) {
      ev["fo_cross_check"] = "skipped (budget)";
    }
  }
  r.add("centralizer dimension", ok, summary, ev);
}

void print(const Report& r, const Globals& gl, std::ostream& out) {
  if (gl.json_output) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"status", c.status}, {"summary", c.summary},
                        {"evidence", c.evidence}});
    const json doc = {{"schema_version", kSchemaVersion},
                      {"command", r.command},
                      {"parameters", r.parameters},
                      {"rng", {{"name", Rng::kName}, {"seed", gl.seed}}},
                      {"budget", gl.budget},
                      {"checks", checks},
                      {"passed", r.passed()}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << r.command << " (seed " << gl.seed << ")\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    std::string tag = c.status == "pass" ? "PASS " : c.status == "fail" ? "FAIL " : "ERROR";
    out << "  " << tag << "  " << c.name << ": " << c.summary << "\n";
    if (c.status == "pass") ++passed;
  }
  out << (r.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size()
      << " checks)\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sylow subgroup verification toolkit", "sylowkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json_output, "machine-readable report");
  app.add_option("--seed", gl.seed, "seed for every random sample");
  app.add_option("--budget", gl.budget, "first-order evaluation binding budget");

  std::optional<std::size_t> max_order, count;
  std::optional<std::string> group, primes, builtin, formula_file;
  std::string group_req, pairs_mode = "all";
  std::uint64_t p = 2;
  bool all_pairs = false;
  std::size_t samples = 1000;

  auto* dich = app.add_subcommand("dichotomy", "involution dichotomy on one or many groups");
  auto* mo = dich->add_option("--max-order", max_order, "every corpus group up to this order");
  auto* go = dich->add_option("--group", group, "a single group");
  mo->excludes(go);
  dich->require_option(1);

  auto* conj = app.add_subcommand("conjugator", "conjugate Sylow 2-subgroups by escalation");
  conj->add_option("--group", group_req)->required();
  conj->add_option("--p", p);
  conj->add_flag("--all-pairs", all_pairs);

  auto* syl = app.add_subcommand("sylow", "check the Sylow theorems");
  syl->add_option("--group", group_req)->required();
  syl->add_option("--p", p)->required();

  auto* plat = app.add_subcommand("platonov", "non-conjugate Sylow 2-subgroups of SL2(Q)");
  auto* po = plat->add_option("--primes", primes, "comma-separated primes, each 3 mod 4");
  auto* co = plat->add_option("--count", count, "use the first K primes that are 3 mod 4");
  po->excludes(co);
  plat->add_option("--pairs", pairs_mode)
      ->check(CLI::IsMember({"all", "consecutive", "none"}));
  plat->add_option("--samples", samples);
  auto* val = app.add_subcommand("valuation-lemma", "valuation parity of a^2 + b^2");
  val->add_option("--p", p)->required();
  val->add_option("--samples", samples);

  auto* sl2 = app.add_subcommand("sl2q-properties", "torsion facts about SL2(Q)");
  sl2->add_option("--samples", samples);

  auto* foc = app.add_subcommand("fo-check", "evaluate a first-order sentence on a group");
  foc->add_option("--group", group_req)->required();
  auto* bo = foc->add_option("--builtin", builtin);
  auto* fo_file = foc->add_option("--formula-file", formula_file);
  bo->excludes(fo_file);

  auto* cd = app.add_subcommand("centralizer-dim", "longest strict centralizer chain");
  cd->add_option("--group", group_req)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kUsageText;
    return kUsage;
  }

  Report report;
  try {
    CLI::App* cmd = app.get_subcommands().front();
    report.command = cmd->get_name();
    Rng rng(gl.seed);
    if (cmd == dich) {
      cmd_dichotomy(report, gl, max_order, group);
    } else if (cmd == conj) {
      cmd_conjugator(report, group_req, p, all_pairs);
    } else if (cmd == syl) {
      cmd_sylow(report, group_req, p);
    } else if (cmd == plat) {
      if (!primes && !count) throw UsageError("platonov: give --primes or --count");
      cmd_platonov(report, rng, primes, count, pairs_mode, samples);
    } else if (cmd == val) {
      cmd_valuation(report, rng, p, samples);
    } else if (cmd == sl2) {
      cmd_sl2q(report, rng, samples);
    } else if (cmd == foc) {
      if (!builtin && !formula_file)
        throw UsageError("fo-check: give --builtin or --formula-file");
      cmd_fo(report, gl, group_req, builtin, formula_file);
    } else if (cmd == cd) {
      cmd_cdim(report, gl, group_req);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsageText;
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kUsage;
  }
  print(report, gl, out);
  return report.passed() ? kPass : kCheckFailure;
}

}  // namespace sylowkit::cli
