#include "cutsim/prover.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"

namespace cutsim {

namespace {

bool size_less(const Term& a, const Term& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void closed_subterms(const Term& t, std::set<Term>& out) {
  for_each_subterm(t, [&](const Term& s, std::uint32_t) {
    if (s.is_closed()) out.insert(s);
  });
}

// Domain types of every Pi binder in t.
void binder_types(const Term& t, std::set<Type>& out) {
  for_each_subterm(t, [&](const Term& s, std::uint32_t) {
    if (auto p = match_pi(s)) out.insert(p->type().domain());
  });
}

// Argument types of a predicate type b1 -> ... -> bk -> o, or nullopt.
std::optional<std::vector<Type>> predicate_args(const Type& t) {
  std::vector<Type> args;
  Type cur = t;
  while (cur.is_fun()) {
    args.push_back(cur.domain());
    cur = cur.codomain();
  }
  if (args.empty() || !cur.is_o()) return std::nullopt;
  return args;
}

class Search {
 public:
  Search(const Calculus& calc, const SearchBudget& budget, std::vector<Term> pool)
      : calc_(calc), budget_(budget), pool_(std::move(pool)) {}

  struct Result {
    std::optional<Derivation> d;
    bool tainted = false;
  };

  Result solve(const Sequent& g, std::size_t nodes, std::size_t depth) {
    if (nodes == 0) return {};
    if (auto it = best_.find(g); it != best_.end() && it->second.step_count() <= nodes) {
      ++stats.memo_hits;
      return {it->second, false};
    }
    if (auto it = failed_.find(g); it != failed_.end() && it->second >= nodes) {
      ++stats.memo_hits;
      return {};
    }
    if (depth >= budget_.max_depth) {
      depth_cut = true;
      return {std::nullopt, true};
    }

    if (nodes == 1 || lower_bound(g) == 1) {
      // Only init fits in one node; checking for it needs no instance list.
      if (auto f = closing_atom(g)) {
        Derivation d = Derivation::init(g);
        best_.insert_or_assign(g, d);
        return {d, false};
      }
      std::size_t& f = failed_[g];
      f = std::max<std::size_t>(f, 1);
      if (nodes == 1) return {};
    }

    const auto& insts = instances(g);
    Result out;
    for (const RuleInstance& ri : insts) {
      std::size_t need = 1;
      for (const Sequent& p : ri.premises) need += lower_bound(p);
      if (need > nodes) continue;
      std::vector<Derivation> kids;
      if (fill(ri, 0, nodes - 1, depth, kids, out.tainted)) {
        out.d = Derivation(ri.rule, ri.params, ri.conclusion, std::move(kids));
        break;
      }
    }

    if (out.d) {
      auto it = best_.find(g);
      if (it == best_.end() || out.d->step_count() < it->second.step_count()) {
        best_.insert_or_assign(g, *out.d);
      }
    } else if (!out.tainted) {
      std::size_t& f = failed_[g];
      f = std::max(f, nodes);
    }
    return out;
  }

  SearchStats stats;
  bool depth_cut = false;

 private:
  // Derivations for premises k.. within `nodes` in total. Every premise but
  // the last gets its minimal size, which leaves the most room for the rest.
  bool fill(const RuleInstance& ri, std::size_t k, std::size_t nodes, std::size_t depth,
            std::vector<Derivation>& kids, bool& tainted) {
    const std::size_t n = ri.premises.size();
    if (k == n) return true;
    const std::size_t later = n - k - 1;
    if (later == 0) {
      Result r = solve(ri.premises[k], nodes, depth + 1);
      tainted = tainted || r.tainted;
      if (!r.d) return false;
      kids.push_back(*r.d);
      return true;
    }
    std::size_t rest_lb = 0;
    for (std::size_t j = k + 1; j < n; ++j) rest_lb += lower_bound(ri.premises[j]);
    for (std::size_t b = lower_bound(ri.premises[k]); b + rest_lb <= nodes; ++b) {
      Result r = solve(ri.premises[k], b, depth + 1);
      tainted = tainted || r.tainted;
      if (!r.d) continue;
      kids.push_back(*r.d);
      if (fill(ri, k + 1, nodes - r.d->step_count(), depth, kids, tainted)) return true;
      kids.pop_back();
      return false;
    }
    return false;
  }

  static std::optional<Term> closing_atom(const Sequent& g) {
    for (const Term& f : g) {
      if (is_atomic(f) && g.contains(mk_not(f))) return f;
    }
    return std::nullopt;
  }

  // Fewest nodes a derivation of g can have, as far as is known.
  std::size_t lower_bound(const Sequent& g) const {
    auto it = failed_.find(g);
    return it == failed_.end() ? 1 : it->second + 1;
  }

  const std::vector<RuleInstance>& instances(const Sequent& g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    ++stats.expanded;
    std::vector<RuleInstance> all = maximal_rule_instances(g, calc_, pool_);
    std::vector<RuleInstance> keep;
    for (RuleInstance& ri : all) {
      // A premise inside the goal: its derivation, weakened, is a smaller
      // derivation of the goal.
      bool redundant = std::any_of(ri.premises.begin(), ri.premises.end(),
                                   [&](const Sequent& p) { return p.size() <= g.size(); });
      if (redundant) continue;
      if (ri.premises.empty()) {
        keep.assign(1, std::move(ri));
        break;
      }
      keep.push_back(std::move(ri));
    }
    return cache_.emplace(g, std::move(keep)).first->second;
  }

  const Calculus& calc_;
  const SearchBudget& budget_;
  std::vector<Term> pool_;
  std::unordered_map<Sequent, std::vector<RuleInstance>> cache_;
  std::unordered_map<Sequent, Derivation> best_;
  std::unordered_map<Sequent, std::size_t> failed_;
};

}  // namespace

std::vector<Term> witness_pool(const Sequent& goal, const SearchBudget& budget) {
  std::set<Term> base;
  std::set<Type> binders;
  std::set<std::string> names = goal.param_names();
  for (const Term& s : budget.seeds) {
    base.insert(s);
    for (const auto& kv : params_of(s)) names.insert(kv.first);
  }
  if (budget.policy == PoolPolicy::Explicit) {
    std::vector<Term> out(base.begin(), base.end());
    std::sort(out.begin(), out.end(), size_less);
    return out;
  }
  for (const Term& f : goal) {
    closed_subterms(f, base);
    binder_types(f, binders);
  }
  for (const Term& s : budget.seeds) {
    closed_subterms(s, base);
    binder_types(s, binders);
  }
  if (budget.policy == PoolPolicy::PoolPlusFresh) {
    for (const Type& t : binders) base.insert(Term::constant(fresh_name(t, names), t));
  }

  std::vector<Term> formulas;
  for (const Term& t : base) {
    if (t.type().is_o()) formulas.push_back(t);
  }
  std::set<Term> wrappers;
  for (const Type& t : binders) {
    auto args = predicate_args(t);
    if (!args) continue;
    for (const Term& c : formulas) {
      Term w = c;
      for (auto a = args->rbegin(); a != args->rend(); ++a) w = Term::lam_raw("X", *a, shift(w, 1));
      wrappers.insert(w);
      if (args->size() != 1) continue;
      for (const Term& s : base) {
        if (s.type() != args->front() || s == c) continue;
        if (auto body = abstract_subterm(c, s)) wrappers.insert(Term::lam_raw("X", s.type(), *body));
      }
    }
  }

  std::vector<Term> out(base.begin(), base.end());
  std::sort(out.begin(), out.end(), size_less);
  std::vector<Term> extra;
  for (const Term& w : wrappers) {
    if (!base.count(w)) extra.push_back(w);
  }
  std::sort(extra.begin(), extra.end(), size_less);
  for (const Term& w : extra) {
    if (out.size() >= budget.max_pool) break;
    out.push_back(w);
  }
  return out;
}

ProveResult prove(const Sequent& goal, const Calculus& calc, const SearchBudget& budget) {
  if (budget.max_nodes < 1) throw std::invalid_argument("max_nodes must be at least 1");
  std::vector<Term> pool = witness_pool(goal, budget);
  Search search(calc, budget, pool);
  search.stats.pool_size = pool.size();
  ProveResult res;
  for (std::size_t b = 1; b <= budget.max_nodes; ++b) {
    Search::Result r = search.solve(goal, b, 0);
    if (r.d) {
      res.derivation = r.d;
      break;
    }
    res.exhausted_bound = b;
  }
  res.exhaustive = !search.depth_cut;
  res.stats = search.stats;
  return res;
}

std::optional<std::size_t> minimal_proof_size(const Sequent& goal, const Calculus& calc,
                                              std::size_t max_nodes, const SearchBudget& base) {
  SearchBudget b = base;
  b.max_nodes = max_nodes;
  ProveResult r = prove(goal, calc, b);
  if (!r.found()) return std::nullopt;
  return r.derivation->step_count();
}

std::string ApplicabilityReport::certificate() const {
  std::ostringstream os;
  os << "pool-free instances: " << instances.size() << "\n";
  os << "piL: " << (pi_l_possible ? "possible" : "impossible (no ~Pi formula or not a rule)") << "\n";
  os << "cut: " << (cut_possible ? "possible" : "impossible") << "\n";
  os << "extFAx: " << (ext_axiom_possible ? "possible" : "impossible") << "\n";
  if (empty()) os << "no rule concludes the goal\n";
  return os.str();
}

ApplicabilityReport refute_applicability(const Sequent& goal, const Calculus& calc) {
  ApplicabilityReport rep;
  rep.instances = applicable_rule_instances(goal, calc, {});
  if (calc.allows(Rule::PiL)) {
    for (const Term& f : goal) {
      auto a = match_not(f);
      if (a && match_pi(*a)) rep.pi_l_possible = true;
    }
  }
  rep.cut_possible = calc.allows(Rule::Cut);
  if (calc.allows(Rule::CutA) && calc.cut_a_realizer) {
    rep.cut_possible = rep.cut_possible || goal.contains(mk_not(beta_normalize(*calc.cut_a_realizer)));
  }
  rep.ext_axiom_possible = calc.allows(Rule::ExtFAx);
  return rep;
}

std::vector<std::string> bench_families() { return {"iterated-definition", "pigeonhole"}; }

std::vector<BenchInstance> bench_family(const std::string& name) {
  std::vector<BenchInstance> out;
  if (name == "iterated-definition") {
    const Type o = Type::o();
    Term a = Term::constant("a", o), b = Term::constant("b", o);
    Term q = Term::constant("q", Type::fun(o, o));
    Term qa = a, qb = b, qx = Term::bound(0, o);
    for (int n = 1; n <= 7; ++n) {
      qa = Term::app(q, qa);
      qb = Term::app(q, qb);
      qx = Term::app(q, qx);
      out.push_back({"n=" + std::to_string(n), Sequent{mk_not(a), mk_not(b), mk_not(qa), qb},
                     {leibniz_eq(a, b, o), Term::lam_raw("X", o, qx)}});
    }
    return out;
  }
  if (name == "pigeonhole") {
    for (int n = 1; n <= 2; ++n) {
      auto p = [](int i, int k) {
        return Term::constant("p" + std::to_string(i) + "_" + std::to_string(k), Type::o());
      };
      std::vector<Term> fs;
      for (int i = 1; i <= n + 1; ++i) {
        Term some = p(i, 1);
        for (int k = 2; k <= n; ++k) some = mk_or(some, p(i, k));
        fs.push_back(mk_not(some));
      }
      for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n + 1; ++i) {
          for (int j = i + 1; j <= n + 1; ++j) fs.push_back(mk_and(p(i, k), p(j, k)));
        }
      }
      out.push_back({"n=" + std::to_string(n), Sequent(fs), {}});
    }
    return out;
  }
  throw std::invalid_argument("unknown bench family: " + name);
}

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& family, const Calculus& calc,
                                bool with_cut, std::size_t max_nodes) {
  Calculus c = calc;
  c.cut = with_cut;
  std::vector<BenchRow> rows;
  for (const BenchInstance& inst : family) {
    SearchBudget budget;
    budget.max_nodes = max_nodes;
    budget.policy = PoolPolicy::Explicit;
    budget.seeds = inst.seeds;
    ProveResult r = prove(inst.goal, c, budget);
    BenchRow row{inst.label, std::nullopt, r.stats.expanded};
    if (r.found()) row.size = r.derivation->step_count();
    rows.push_back(row);
  }
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "instance size expanded\n";
  for (const BenchRow& r : rows) {
    os << r.label << " " << (r.size ? std::to_string(*r.size) : std::string("-")) << " " << r.expanded
       << "\n";
  }
  return os.str();
}

}  // namespace cutsim
