#include "cutsim/transform.hpp"

#include <algorithm>
#include <functional>

#include "cutsim/checker.hpp"
#include "cutsim/errors.hpp"
#include "cutsim/kernel.hpp"
#include "cutsim/logic.hpp"

namespace cutsim {

namespace {

Term rename_opt(const Term& t, const ParamRenaming& theta) {
  return t.valid() ? rename_params(t, theta) : t;
}

Sequent rename_terms(const std::vector<Term>& fs, const ParamRenaming& theta) {
  std::vector<Term> out;
  out.reserve(fs.size());
  for (const Term& f : fs) out.push_back(rename_params(f, theta));
  return Sequent(std::move(out));
}

void require_sentences(const Sequent& s, const char* kind) {
  if (!s.well_formed()) {
    throw TransformError(kind, "formulae must be closed, beta-normal and of type o");
  }
}

}  // namespace

Sequent rename_sequent(const Sequent& s, const ParamRenaming& theta) {
  return rename_terms(s.formulas(), theta);
}

Derivation transport(const Derivation& d, const ParamRenaming& theta, const Sequent& target,
                     const Sequent& sticky) {
  if (d.rule() == Rule::Weak) return transport(d.premise(0), theta, target, sticky);

  RuleParams params = d.params();
  params.term = rename_opt(params.term, theta);
  ParamRenaming inner = theta;
  if (d.rule() == Rule::PiR) {
    const Term& c = params.eigen;
    std::set<std::string> used = target.param_names();
    std::string name = used.count(c.name()) ? fresh_name(c.type(), used) : c.name();
    inner[c.name()] = name;
    params.eigen = Term::constant(name, c.type());
  }

  // formulae added by weakening travel up to every premise
  const Sequent added = target.without(rename_sequent(d.conclusion(), theta)).with(sticky);
  std::vector<Derivation> kids;
  kids.reserve(d.premises().size());
  for (const Derivation& p : d.premises()) {
    Sequent t = rename_sequent(p.conclusion(), inner).with(added);
    kids.push_back(transport(p, inner, t, sticky));
  }
  return Derivation(d.rule(), params, target, std::move(kids));
}

Derivation weaken(const Derivation& d, const Sequent& extra) {
  require_sentences(extra, "InvalidExtra");
  return transport(d, {}, d.conclusion().with(extra));
}

Derivation weaken_to(const Derivation& d, const Sequent& target) {
  if (!d.conclusion().subset_of(target)) {
    throw TransformError("InvalidExtra", "target does not contain the conclusion");
  }
  if (d.conclusion() == target) return d;
  require_sentences(target, "InvalidExtra");
  return transport(d, {}, target);
}

Derivation rename_params(const Derivation& d, const ParamRenaming& theta) {
  return transport(d, theta, rename_sequent(d.conclusion(), theta));
}

Derivation neg_invert(const Derivation& d, const Term& a) {
  const Term nna = mk_not(mk_not(a));
  const Sequent& gamma = d.conclusion();
  if (!gamma.contains(nna)) {
    throw TransformError("NotPresent", "the double negation is not in the conclusion");
  }
  const Sequent target = gamma.without(nna).with(a);

  if (d.rule() == Rule::Weak) {
    const Derivation& child = d.premise(0);
    if (child.conclusion().contains(nna)) return weaken_to(neg_invert(child, a), target);
    return weaken_to(child, target);
  }

  std::vector<NodeShape> shapes = analyze_node(d);
  for (const NodeShape& s : shapes) {
    if (std::find(s.principal.begin(), s.principal.end(), nna) != s.principal.end()) continue;
    std::vector<Derivation> kids;
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
      const auto& side = s.sides[i];
      if (std::find(side.begin(), side.end(), nna) != side.end()) {
        kids.push_back(weaken(d.premise(i), Sequent{a}));
      } else {
        kids.push_back(neg_invert(d.premise(i), a));
      }
    }
    return Derivation(d.rule(), d.params(), target, std::move(kids));
  }
  for (const NodeShape& s : shapes) {
    if (d.rule() != Rule::Neg || s.principal != std::vector<Term>{nna}) continue;
    const Derivation& child = d.premise(0);
    if (child.conclusion().contains(nna)) return weaken_to(neg_invert(child, a), target);
    return weaken_to(child, target);
  }
  throw TransformError("ShapeMismatch", "the double negation is principal in a non-neg rule");
}

namespace {

Derivation replace_cuts(const Derivation& d, Rule which,
                        const std::function<Derivation(const Derivation&, std::vector<Derivation>)>& f) {
  std::vector<Derivation> kids;
  kids.reserve(d.premises().size());
  for (const Derivation& p : d.premises()) kids.push_back(replace_cuts(p, which, f));
  if (d.rule() == which) return f(d, std::move(kids));
  return Derivation(d.rule(), d.params(), d.conclusion(), std::move(kids));
}

// Realizer derivation standing in for a cut-like node concluding gamma.
Derivation realize_at(const CutStrongSchema& s, const Derivation& node,
                      const std::vector<Derivation>& kids) {
  const Sequent& gamma = node.conclusion();
  const Term& c = node.params().term;
  return realize(s, gamma, c, weaken_to(kids.at(0), gamma.with(c)),
                 weaken_to(kids.at(1), gamma.with(mk_not(c))));
}

}  // namespace

Derivation simulate_cut_rule(const Derivation& d, const CutStrongSchema& s) {
  if (!d.conclusion().contains(mk_not(s.realizer))) {
    throw TransformError("NotCutStrong", "the negated realizer is not in the conclusion");
  }
  Derivation kept = transport(d, {}, d.conclusion(), Sequent{mk_not(s.realizer)});
  return replace_cuts(kept, Rule::Cut, [](const Derivation& n, std::vector<Derivation> kids) {
    return Derivation(Rule::CutA, n.params(), n.conclusion(), std::move(kids));
  });
}

Derivation eliminate_cut_a(const Derivation& d, const CutStrongSchema& s) {
  const Term na = mk_not(s.realizer);
  return replace_cuts(d, Rule::CutA, [&](const Derivation& n, std::vector<Derivation> kids) {
    if (!n.conclusion().contains(na)) {
      throw TransformError("SchemaMismatch", "cutA node does not conclude the negated realizer");
    }
    return realize_at(s, n, kids);
  });
}

Derivation eliminate_cut_in_ge(const Derivation& d) {
  const Type i = Type::i();
  const CutStrongSchema fe = func_ext_schema(i, i);
  const Term nfe = mk_not(fe.realizer);
  return replace_cuts(d, Rule::Cut, [&](const Derivation& n, std::vector<Derivation> kids) {
    Derivation sim = realize_at(fe, Derivation(Rule::Cut, n.params(), n.conclusion().with(nfe), {}),
                                kids);
    RuleParams p;
    p.a = i;
    p.b = i;
    return Derivation(Rule::ExtFAx, p, n.conclusion(), {sim});
  });
}

}  // namespace cutsim
