// Command-line front end. Exit status: 0 success, 1 check failure or not
// proved, 2 usage or parse error.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cutsim/checker.hpp"
#include "cutsim/errors.hpp"
#include "cutsim/logic.hpp"
#include "cutsim/prover.hpp"
#include "cutsim/schemas.hpp"
#include "cutsim/syntax.hpp"
#include "cutsim/transform.hpp"

using namespace cutsim;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Problem load_problem(const std::string& path) { return parse_problem(slurp(path)); }

const NamedDerivation& first_derivation(const Problem& p, const std::string& path) {
  if (p.derivations.empty()) throw UsageError(path + ": no derivation");
  return p.derivations.front();
}

bool closes_by_init(const Sequent& s) {
  for (const Term& f : s) {
    if (is_atomic(f) && s.contains(mk_not(f))) return true;
  }
  return false;
}

// ---- check ----

int cmd_check(const std::string& file, const std::string& calc_text) {
  Problem p = load_problem(file);
  if (p.derivations.empty()) throw UsageError(file + ": no derivation to check");
  std::optional<Calculus> forced;
  if (!calc_text.empty()) forced = parse_calculus(calc_text, p.signature);
  int status = kOk;
  std::size_t total = 0;
  for (const NamedDerivation& nd : p.derivations) {
    Calculus calc = forced ? *forced : nd.calculus.value_or(Calculus::gb());
    auto err = check_derivation(nd.derivation, calc);
    if (err) {
      std::cout << nd.name << " FAIL " << err->path << " " << reason_name(err->reason);
      if (!err->detail.empty()) std::cout << " (" << err->detail << ")";
      std::cout << "\n";
      status = kFail;
    } else {
      std::cout << nd.name << " ok steps=" << nd.derivation.step_count() << "\n";
    }
    total += nd.derivation.step_count();
  }
  std::cout << "total steps=" << total << "\n";
  return status;
}

// ---- schema ----

std::optional<LeibnizParts> equation_in(const Sequent& delta, bool andrews,
                                        const std::optional<Type>& alpha) {
  for (const Term& f : delta) {
    auto a = match_not(f);
    if (!a) continue;
    auto e = andrews ? match_andrews(*a) : match_leibniz(*a);
    if (e && (!alpha || e->type == *alpha)) return e;
  }
  return std::nullopt;
}

// `name` or `name@type`. Throws UsageError for unknown names.
CutStrongSchema schema_by_name(const std::string& spec, const Sequent& delta) {
  std::string name = lower(spec.substr(0, spec.find('@')));
  std::optional<Type> at;
  if (auto pos = spec.find('@'); pos != std::string::npos) at = parse_type(spec.substr(pos + 1));
  auto need_no_type = [&] {
    if (at) throw UsageError("schema " + name + " takes no type");
  };
  if (name == "trivial") return need_no_type(), trivial_schema();
  if (name == "tautology") return need_no_type(), tautology_schema();
  if (name == "comprehensioni" || name == "comprehension") return need_no_type(), comprehension_schema();
  if (name == "boolext") return need_no_type(), bool_ext_schema();
  if (name == "induction") return need_no_type(), induction_schema();
  if (name == "choice") return choice_schema(at.value_or(Type::i()));
  if (name == "description") return description_schema(at.value_or(Type::i()));
  if (name == "funcext") {
    Type ft = at.value_or(Type::fun(Type::i(), Type::i()));
    if (!ft.is_fun()) throw UsageError("funcext needs a function type");
    return func_ext_schema(ft.domain(), ft.codomain());
  }
  if (name == "leibniz" || name == "andrews") {
    bool andrews = name == "andrews";
    auto e = equation_in(delta, andrews, at);
    if (!e) {
      throw TransformError("ShapeMismatch", "the context has no negated " + name + " equation" +
                                                (at ? " at " + print_type(*at) : std::string()));
    }
    return andrews ? andrews_schema(e->lhs, e->rhs, e->type)
                   : leibniz_schema(e->lhs, e->rhs, e->type);
  }
  throw UsageError("unknown schema: " + spec);
}

Derivation premise_derivation(const std::string& file, const Sequent& want, const char* flag) {
  if (file.empty()) {
    if (!closes_by_init(want)) {
      throw UsageError(std::string(flag) + " is required: " + print_sequent(want) +
                       " is not an init sequent");
    }
    return Derivation::init(want);
  }
  Problem p = load_problem(file);
  return first_derivation(p, file).derivation;
}

Signature base_signature(const std::string& sig_file) {
  if (sig_file.empty()) return {};
  return load_problem(sig_file).signature;
}

int cmd_schema(const std::string& name, const std::string& context, const std::string& cut_text,
               const std::string& left, const std::string& right, const std::string& sig_file) {
  Signature sig = base_signature(sig_file);
  Sequent delta = parse_sequent(context, sig, Undeclared::Infer);
  Sequent cs = parse_sequent("{" + cut_text + "}", sig, Undeclared::Infer);
  if (cs.size() != 1) throw UsageError("--cutformula must be one formula");
  Term c = *cs.begin();
  CutStrongSchema s = schema_by_name(name, delta);
  Derivation d_c = premise_derivation(left, delta.with(c), "--left");
  Derivation d_nc = premise_derivation(right, delta.with(mk_not(c)), "--right");
  Derivation out = realize(s, delta, c, d_c, d_nc);
  std::size_t extra = out.step_count() - d_c.step_count() - d_nc.step_count();
  std::cout << print_derivation_problem(s.name, out, Calculus::gb());
  std::cout << "extra=" << extra << "\n";
  if (auto err = check_derivation(out, Calculus::gb())) {
    std::cerr << "realized derivation does not check: " << err->str() << "\n";
    return kFail;
  }
  return kOk;
}

// ---- simulate ----

int cmd_simulate(const std::string& file, const std::string& realizer) {
  Problem p = load_problem(file);
  const Derivation& d = first_derivation(p, file).derivation;
  std::string want = lower(realizer.substr(0, realizer.find('@')));
  std::optional<CutStrongSchema> schema;
  for (const CutStrongSchema& s : find_realizers(d.conclusion())) {
    if (lower(s.name) == want || (want == "comprehension" && s.kind == SchemaKind::ComprehensionI)) {
      schema = s;
      break;
    }
  }
  if (!schema) {
    std::cerr << "NotCutStrong: the conclusion has no negated " << realizer << " realizer\n";
    return kFail;
  }
  const std::size_t steps = d.step_count(), cuts = d.count_rule(Rule::Cut);
  Derivation out = eliminate_cut_a(simulate_cut_rule(d, *schema), *schema);
  const bool bound_ok = out.step_count() <= steps + cuts * schema->k;
  std::cout << print_derivation_problem("simulated", out, Calculus::gb());
  std::cout << "d=" << steps << " n=" << cuts << " k=" << schema->k << " out=" << out.step_count()
            << " bound-ok=" << (bound_ok ? "true" : "false") << "\n";
  if (auto err = check_derivation(out, Calculus::gb())) {
    std::cerr << "output does not check: " << err->str() << "\n";
    return kFail;
  }
  return bound_ok ? kOk : kFail;
}

// ---- prove ----

PoolPolicy pool_policy(const std::string& s) {
  if (s == "subterm") return PoolPolicy::SubtermClosure;
  if (s == "explicit") return PoolPolicy::Explicit;
  if (s == "fresh") return PoolPolicy::PoolPlusFresh;
  throw UsageError("unknown pool policy: " + s);
}

int cmd_prove(const std::string& file, const std::string& goal_name, const std::string& calc_text,
              std::size_t max_nodes, const std::vector<std::string>& seeds,
              const std::string& policy) {
  Problem p = load_problem(file);
  const NamedSequent* goal = nullptr;
  if (goal_name.empty()) {
    if (p.sequents.size() != 1) throw UsageError("--goal is required when the file has not exactly one seq");
    goal = &p.sequents.front();
  } else {
    goal = p.find_sequent(goal_name);
    if (!goal) throw UsageError("no seq named " + goal_name);
  }
  Calculus calc = parse_calculus(calc_text, p.signature);
  SearchBudget budget;
  budget.max_nodes = max_nodes;
  budget.policy = pool_policy(policy);
  for (const std::string& s : seeds) budget.seeds.push_back(parse_term(s, p.signature));
  ProveResult r = prove(goal->sequent, calc, budget);
  if (!r.found()) {
    std::cout << "NotFound exhausted=" << r.exhausted_bound
              << " exhaustive=" << (r.exhaustive ? "true" : "false") << "\n";
    if (ApplicabilityReport rep = refute_applicability(goal->sequent, calc); rep.empty()) {
      std::cout << rep.certificate();
    }
    return kFail;
  }
  std::cout << print_derivation_problem(goal->name, *r.derivation, calc);
  std::cout << "size=" << r.derivation->step_count() << " expanded=" << r.stats.expanded
            << " pool=" << r.stats.pool_size << "\n";
  return kOk;
}

// ---- bench ----

int cmd_bench(const std::string& family, const std::string& calc_text, bool with_cut,
              std::size_t max_nodes) {
  std::vector<BenchInstance> insts;
  try {
    insts = bench_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " (known: iterated-definition, pigeonhole)");
  }
  Signature sig;
  Calculus calc = parse_calculus(calc_text, sig);
  std::cout << "family=" << family << " calculus=" << calc_text
            << " cut=" << (with_cut ? "with" : "without") << " max-nodes=" << max_nodes << "\n";
  std::cout << format_bench_table(run_bench(insts, calc, with_cut, max_nodes));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker, cut simulation and proof search for elementary type theory sequents"};
  app.require_subcommand(1);

  std::string file, calc_text, name, context, cut_text, left, right, sig_file, realizer, goal,
      policy = "fresh", family;
  std::size_t max_nodes = 8;
  std::vector<std::string> seeds;
  bool with_cut = false, without_cut = false;

  auto* check = app.add_subcommand("check", "Check every derivation in a problem file");
  check->add_option("file", file)->required();
  check->add_option("--calculus", calc_text, "Override the calculus of every derivation");

  auto* schema = app.add_subcommand("schema", "Build the realizer derivation of a cut-strong formula");
  schema->add_option("name", name, "trivial, tautology, leibniz@T, andrews@T, comprehensionI, "
                                   "boolext, funcext@T->U, induction, choice@T, description@T")
      ->required();
  schema->add_option("--context", context, "The context sequent, containing the negated realizer")
      ->required();
  schema->add_option("--cutformula", cut_text)->required();
  schema->add_option("--left", left, "Derivation file for context * C");
  schema->add_option("--right", right, "Derivation file for context * ~C");
  schema->add_option("--sig", sig_file, "Problem file whose declarations are used for parsing");

  auto* simulate = app.add_subcommand("simulate", "Replace the cuts of a GbCut derivation");
  simulate->add_option("file", file)->required();
  simulate->add_option("--realizer", realizer)->required();

  auto* prove_cmd = app.add_subcommand("prove", "Search for a smallest derivation");
  prove_cmd->add_option("file", file)->required();
  prove_cmd->add_option("--goal", goal, "Name of a seq in the file");
  prove_cmd->add_option("--calculus", calc_text)->required();
  prove_cmd->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);
  prove_cmd->add_option("--seed", seeds, "Extra witness or cut formula (repeatable)");
  prove_cmd->add_option("--pool", policy, "subterm, explicit or fresh");

  auto* bench = app.add_subcommand("bench", "Minimal proof sizes over a goal family");
  bench->add_option("family", family)->required();
  bench->add_option("--calculus", calc_text)->required();
  auto* wc = bench->add_flag("--with-cut", with_cut);
  auto* woc = bench->add_flag("--without-cut", without_cut);
  wc->excludes(woc);
  bench->add_option("--max-nodes", max_nodes)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(file, calc_text);
    if (*schema) return cmd_schema(name, context, cut_text, left, right, sig_file);
    if (*simulate) return cmd_simulate(file, realizer);
    if (*prove_cmd) return cmd_prove(file, goal, calc_text, max_nodes, seeds, policy);
    if (*bench) {
      if (!with_cut && !without_cut) throw UsageError("one of --with-cut, --without-cut is required");
      if (bench->count("--max-nodes") == 0) max_nodes = 12;
      return cmd_bench(family, calc_text, with_cut, max_nodes);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const TransformError& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
