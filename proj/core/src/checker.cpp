#include "cutsim/checker.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <set>

#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"

namespace cutsim {

const char* reason_name(CheckReason r) {
  switch (r) {
    case CheckReason::RuleNotInCalculus:
      return "rule-not-in-calculus";
    case CheckReason::ShapeMismatch:
      return "shape-mismatch";
    case CheckReason::EigenvariableViolation:
      return "eigenvariable-violation";
    case CheckReason::NotBetaNormal:
      return "not-beta-normal";
    case CheckReason::NotAtomic:
      return "not-atomic";
    case CheckReason::TypeMismatch:
      return "type-mismatch";
  }
  return "?";
}

std::string CheckError::str() const { return path + ": " + reason_name(reason); }

bool operator==(const RuleInstance& a, const RuleInstance& b) {
  auto same = [](const Term& x, const Term& y) { return x.valid() == y.valid() && (!x.valid() || x == y); };
  return a.rule == b.rule && a.conclusion == b.conclusion && a.premises == b.premises &&
         same(a.params.term, b.params.term) && same(a.params.eigen, b.params.eigen) &&
         a.params.n == b.params.n && a.params.a == b.params.a && a.params.b == b.params.b;
}

Term prop_f_premise(const Term& a, const Term& b, const Type& alpha, const Type& beta) {
  Term x = Term::bound(0, alpha);
  Term body = leibniz_eq(Term::app(shift(a, 1), x), Term::app(shift(b, 1), x), beta);
  return beta_normalize(mk_pi(Term::lam_raw("X", alpha, body)));
}

namespace {

// P: principal formulas in the conclusion; sides[i]: the formulas the i-th
// premise must contain in their place.
struct Shape {
  std::vector<Term> principal;
  std::vector<std::vector<Term>> sides;
  RuleParams params;
};

struct Shapes {
  std::vector<Shape> list;
  // Why no shape exists when a more specific reason than shape-mismatch applies.
  std::optional<CheckReason> blocked;
};

bool closed_of_type(const Term& t, const Type& ty) {
  return t.valid() && t.is_closed() && t.type() == ty;
}

std::size_t arity(Rule r, const RuleParams& p) {
  switch (r) {
    case Rule::Init:
      return 0;
    case Rule::OrL:
    case Rule::Cut:
    case Rule::CutA:
    case Rule::PropB:
      return 2;
    case Rule::Dec:
      return p.n;
    default:
      return 1;
  }
}

std::optional<std::vector<std::vector<Term>>> dec_sides(const LeibnizParts& eq, unsigned n) {
  if (!eq.type.is_base()) return std::nullopt;
  Term hl = head_of(eq.lhs), hr = head_of(eq.rhs);
  if (!hl.is_param() || hl != hr) return std::nullopt;
  std::vector<Term> la = args_of(eq.lhs), ra = args_of(eq.rhs);
  if (la.empty() || la.size() != ra.size() || (n != 0 && la.size() != n)) return std::nullopt;
  std::vector<std::vector<Term>> sides;
  for (std::size_t k = 0; k < la.size(); ++k) {
    sides.push_back({leibniz_eq(la[k], ra[k], la[k].type())});
  }
  return sides;
}

// `given` holds the node's parameters when checking; when enumerating it is
// null and parameters are drawn from `pool`. `premises` is only used when
// checking initLeib, where candidates are read off the premise.
Shapes shapes_of(Rule rule, const Sequent& gamma, const RuleParams* given,
                 const std::vector<Term>& pool, const Calculus& calc,
                 const std::vector<Sequent>* premises) {
  Shapes out;
  auto add = [&](std::vector<Term> p, std::vector<std::vector<Term>> sides, RuleParams params = {}) {
    out.list.push_back({std::move(p), std::move(sides), std::move(params)});
  };
  switch (rule) {
    case Rule::Init:
      for (const Term& f : gamma) {
        auto a = match_not(f);
        if (!a || !gamma.contains(*a)) continue;
        if (is_atomic(*a)) {
          add({*a, f}, {});
        } else {
          out.blocked = CheckReason::NotAtomic;
        }
      }
      break;
    case Rule::Neg:
      for (const Term& f : gamma) {
        auto a = match_not(f);
        if (!a) continue;
        if (auto b = match_not(*a)) add({f}, {{*b}});
      }
      break;
    case Rule::NegInv:
      for (const Term& f : gamma) add({f}, {{mk_not(mk_not(f))}});
      break;
    case Rule::OrL:
      for (const Term& f : gamma) {
        auto a = match_not(f);
        if (!a) continue;
        if (auto d = match_or(*a)) add({f}, {{mk_not(d->first)}, {mk_not(d->second)}});
      }
      break;
    case Rule::OrR:
      for (const Term& f : gamma) {
        if (auto d = match_or(f)) add({f}, {{d->first, d->second}});
      }
      break;
    case Rule::PiL:
      for (const Term& f : gamma) {
        auto a = match_not(f);
        if (!a) continue;
        auto g = match_pi(*a);
        if (!g) continue;
        const Type alpha = g->type().domain();
        if (given) {
          if (!closed_of_type(given->term, alpha)) {
            out.blocked = CheckReason::TypeMismatch;
            continue;
          }
          add({f}, {{mk_not(beta_normalize(Term::app(*g, given->term)))}}, *given);
        } else {
          for (const Term& c : pool) {
            if (!closed_of_type(c, alpha)) continue;
            RuleParams p;
            p.term = c;
            add({f}, {{mk_not(beta_normalize(Term::app(*g, c)))}}, p);
          }
        }
      }
      break;
    case Rule::PiR: {
      std::optional<std::set<std::string>> names;
      for (const Term& f : gamma) {
        auto g = match_pi(f);
        if (!g) continue;
        const Type alpha = g->type().domain();
        RuleParams p;
        if (given) {
          p = *given;
          if (!p.eigen.valid() || !p.eigen.is_param() || p.eigen.type() != alpha) {
            out.blocked = CheckReason::TypeMismatch;
            continue;
          }
        } else {
          if (!names) names = gamma.param_names();
          p.eigen = Term::constant(fresh_name(alpha, *names), alpha);
        }
        add({f}, {{beta_normalize(Term::app(*g, p.eigen))}}, p);
      }
      break;
    }
    case Rule::Cut:
    case Rule::CutA: {
      std::vector<Term> principal;
      if (rule == Rule::CutA) {
        Term neg_real = mk_not(beta_normalize(*calc.cut_a_realizer));
        if (!gamma.contains(neg_real)) break;
        principal.push_back(neg_real);
      }
      auto with_formula = [&](const Term& c, const RuleParams& p) {
        Term n = beta_normalize(c);
        add(principal, {{n}, {mk_not(n)}}, p);
      };
      if (given) {
        if (!closed_of_type(given->term, Type::o())) {
          out.blocked = CheckReason::TypeMismatch;
          break;
        }
        with_formula(given->term, *given);
      } else {
        for (const Term& c : pool) {
          if (!closed_of_type(c, Type::o())) continue;
          RuleParams p;
          p.term = c;
          with_formula(c, p);
        }
      }
      break;
    }
    case Rule::ExtFAx:
      if (given) {
        add({}, {{mk_not(func_ext_axiom(given->a, given->b))}}, *given);
      } else {
        std::set<std::pair<std::string, std::string>> seen;
        for (const Term& c : pool) {
          if (!c.type().is_fun()) continue;
          RuleParams p;
          p.a = c.type().domain();
          p.b = c.type().codomain();
          if (!seen.insert({p.a.str(), p.b.str()}).second) continue;
          add({}, {{mk_not(func_ext_axiom(p.a, p.b))}}, p);
        }
      }
      break;
    case Rule::ExtBAx:
      add({}, {{mk_not(bool_ext_axiom())}});
      break;
    case Rule::PropF:
      for (const Term& f : gamma) {
        auto e = match_leibniz(f);
        if (!e || !e->type.is_fun()) continue;
        add({f}, {{prop_f_premise(e->lhs, e->rhs, e->type.domain(), e->type.codomain())}});
      }
      break;
    case Rule::PropB:
      for (const Term& f : gamma) {
        auto e = match_leibniz(f);
        if (!e || !e->type.is_o()) continue;
        add({f}, {{mk_not(e->lhs), e->rhs}, {mk_not(e->rhs), e->lhs}});
      }
      break;
    case Rule::InitLeib:
      if (premises) {
        if (premises->size() != 1) break;
        for (const Term& f : premises->front()) {
          auto e = match_leibniz(f);
          if (!e || !e->type.is_o()) continue;
          Term na = mk_not(e->lhs);
          if (!gamma.contains(na) || !gamma.contains(e->rhs)) continue;
          if (is_atomic(e->lhs) && is_atomic(e->rhs)) {
            add({na, e->rhs}, {{f}});
          } else {
            out.blocked = CheckReason::NotAtomic;
          }
        }
      } else {
        for (const Term& f : gamma) {
          auto a = match_not(f);
          if (!a || !is_atomic(*a)) continue;
          for (const Term& b : gamma) {
            if (b == f || !is_atomic(b)) continue;
            add({f, b}, {{leibniz_eq(*a, b, Type::o())}});
          }
        }
      }
      break;
    case Rule::Dec:
      for (const Term& f : gamma) {
        auto e = match_leibniz(f);
        if (!e) continue;
        auto sides = dec_sides(*e, given ? given->n : 0);
        if (!sides) continue;
        RuleParams p;
        p.n = static_cast<unsigned>(sides->size());
        add({f}, *sides, p);
      }
      break;
    case Rule::Weak:
      break;
  }
  return out;
}

bool contains_all(const Sequent& s, const std::vector<Term>& fs) {
  return std::all_of(fs.begin(), fs.end(), [&](const Term& f) { return s.contains(f); });
}

// Does some context make `shape` relate gamma and the premises?
bool fits(const Shape& shape, const Sequent& gamma, const std::vector<Sequent>& premises) {
  if (premises.size() != shape.sides.size()) return false;
  Sequent principal(shape.principal);
  Sequent low = gamma.without(principal);
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!contains_all(premises[i], shape.sides[i])) return false;
    low = low.with(premises[i].without(Sequent(shape.sides[i])));
  }
  if (!low.subset_of(gamma)) return false;
  for (const Sequent& p : premises) {
    if (!low.subset_of(p)) return false;
  }
  return true;
}

std::optional<CheckReason> check_local(const Derivation& node, const Calculus& calc) {
  const Rule rule = node.rule();
  if (!calc.allows(rule)) return CheckReason::RuleNotInCalculus;
  const Sequent& gamma = node.conclusion();
  for (const Term& f : gamma) {
    if (!f.is_closed() || !f.type().is_o()) return CheckReason::TypeMismatch;
    if (!is_beta_normal(f)) return CheckReason::NotBetaNormal;
  }
  const RuleParams& params = node.params();
  if (rule == Rule::Dec && params.n == 0) return CheckReason::ShapeMismatch;
  if (node.premises().size() != arity(rule, params)) return CheckReason::ShapeMismatch;
  std::vector<Sequent> premises;
  for (const Derivation& p : node.premises()) premises.push_back(p.conclusion());

  if (rule == Rule::Weak) {
    return premises[0].subset_of(gamma) ? std::nullopt
                                        : std::optional<CheckReason>(CheckReason::ShapeMismatch);
  }
  Shapes shapes = shapes_of(rule, gamma, &params, {}, calc, &premises);
  bool eigen_clash = false;
  for (const Shape& s : shapes.list) {
    if (!fits(s, gamma, premises)) continue;
    if (rule == Rule::PiR && gamma.param_names().count(params.eigen.name())) {
      eigen_clash = true;
      continue;
    }
    return std::nullopt;
  }
  if (eigen_clash) return CheckReason::EigenvariableViolation;
  if (shapes.blocked) return shapes.blocked;
  return CheckReason::ShapeMismatch;
}

std::optional<CheckError> check_rec(const Derivation& d, const Calculus& calc,
                                    const std::string& path) {
  if (auto e = check_node(d, calc, path)) return e;
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    if (auto e = check_rec(d.premise(i), calc, path + "." + std::to_string(i))) return e;
  }
  return std::nullopt;
}

}  // namespace

std::vector<NodeShape> analyze_node(const Derivation& node) {
  std::vector<NodeShape> out;
  const Sequent& gamma = node.conclusion();
  std::vector<Sequent> premises;
  for (const Derivation& p : node.premises()) premises.push_back(p.conclusion());
  Rule rule = node.rule() == Rule::CutA ? Rule::Cut : node.rule();
  if (rule == Rule::Weak) return out;
  Shapes shapes = shapes_of(rule, gamma, &node.params(), {}, Calculus{}, &premises);
  if (node.rule() == Rule::CutA && !shapes.list.empty()) {
    // The realizer is not known here; any negated formula may be principal.
    Shape base = shapes.list.front();
    for (const Term& f : gamma) {
      if (!match_not(f)) continue;
      Shape s = base;
      s.principal = {f};
      shapes.list.push_back(s);
    }
  }
  for (const Shape& s : shapes.list) {
    if (!fits(s, gamma, premises)) continue;
    if (rule == Rule::PiR && gamma.param_names().count(node.params().eigen.name())) continue;
    out.push_back({s.principal, s.sides});
  }
  return out;
}

std::optional<CheckError> check_node(const Derivation& node, const Calculus& calc,
                                     const std::string& path) {
  if (auto r = check_local(node, calc)) {
    return CheckError{path, *r, std::string("rule ") + rule_name(node.rule())};
  }
  return std::nullopt;
}

std::optional<CheckError> check_derivation(const Derivation& d, const Calculus& calc) {
  return check_rec(d, calc, "root");
}

namespace {

std::vector<RuleInstance> instances_impl(const Sequent& goal, const Calculus& calc,
                                         const std::vector<Term>& pool, bool all_variants) {
  static const Rule kOrder[] = {Rule::Init,  Rule::InitLeib, Rule::Neg,  Rule::OrR,
                                Rule::OrL,   Rule::PropB,    Rule::PropF, Rule::Dec,
                                Rule::PiR,   Rule::PiL,      Rule::ExtFAx, Rule::ExtBAx,
                                Rule::CutA,  Rule::Cut};
  std::vector<RuleInstance> out;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  for (Rule rule : kOrder) {
    if (!calc.allows(rule)) continue;
    Shapes shapes = shapes_of(rule, goal, nullptr, pool, calc, nullptr);
    for (const Shape& s : shapes.list) {
      Sequent principal(s.principal);
      Sequent rest = goal.without(principal);
      const std::vector<Term>& p = s.principal;
      const unsigned full = (1u << p.size()) - 1;
      // Each principal formula may or may not stay in the premises.
      for (unsigned mask = all_variants ? 0 : full; mask <= full; ++mask) {
        // Without premises the mask changes nothing.
        if (s.sides.empty() && mask != (all_variants ? 0u : full)) continue;
        Sequent delta = mask == full ? goal : rest;
        if (mask != full) {
          for (std::size_t k = 0; k < p.size(); ++k) {
            if (mask & (1u << k)) delta = delta.with(p[k]);
          }
        }
        RuleInstance inst{rule, s.params, goal, {}};
        for (const auto& side : s.sides) inst.premises.push_back(delta.with(Sequent(side)));
        std::size_t h = static_cast<std::size_t>(rule);
        for (const Sequent& q : inst.premises) h = h * 1000003u ^ q.hash();
        if (inst.params.term.valid()) h = h * 1000003u ^ inst.params.term.hash();
        auto& bucket = seen[h];
        bool dup = std::any_of(bucket.begin(), bucket.end(),
                               [&](std::size_t k) { return out[k] == inst; });
        if (dup) continue;
        bucket.push_back(out.size());
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<RuleInstance> applicable_rule_instances(const Sequent& goal, const Calculus& calc,
                                                    const std::vector<Term>& pool) {
  return instances_impl(goal, calc, pool, true);
}

std::vector<RuleInstance> maximal_rule_instances(const Sequent& goal, const Calculus& calc,
                                                 const std::vector<Term>& pool) {
  return instances_impl(goal, calc, pool, false);
}

}  // namespace cutsim
