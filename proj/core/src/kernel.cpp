#include "cutsim/kernel.hpp"

#include <cassert>

#include "cutsim/errors.hpp"

namespace cutsim {

namespace {

Term rebuild_app(const Term& t, const Term& fn, const Term& arg) {
  if (fn.hash() == t.fn().hash() && arg.hash() == t.arg().hash() && fn == t.fn() &&
      arg == t.arg()) {
    return t;
  }
  return Term::app(fn, arg);
}

Term rebuild_lam(const Term& t, const Term& body) {
  if (body == t.body()) return t;
  return Term::lam_raw(t.name(), t.binder_type(), body);
}

Term instantiate_at(const Term& t, const Term& arg, std::uint32_t k) {
  if (t.loose_bound() <= k) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      if (t.index() == k) return shift(arg, static_cast<int>(k));
      return Term::bound(t.index() - 1, t.type());
    case Term::Kind::App:
      return Term::app(instantiate_at(t.fn(), arg, k), instantiate_at(t.arg(), arg, k));
    case Term::Kind::Lam:
      return Term::lam_raw(t.name(), t.binder_type(), instantiate_at(t.body(), arg, k + 1));
    default:
      return t;
  }
}

template <typename Match>
Term abstract_at(const Term& t, const Match& match, std::uint32_t k, bool& found) {
  if (match(t)) {
    found = true;
    return Term::bound(k, t.type());
  }
  switch (t.kind()) {
    case Term::Kind::Bound:
      if (t.index() >= k) return Term::bound(t.index() + 1, t.type());
      return t;
    case Term::Kind::App:
      return rebuild_app(t, abstract_at(t.fn(), match, k, found),
                         abstract_at(t.arg(), match, k, found));
    case Term::Kind::Lam:
      return rebuild_lam(t, abstract_at(t.body(), match, k + 1, found));
    default:
      return t;
  }
}

template <typename Match>
Term replace_at(const Term& t, const Match& match, const Term& a, std::uint32_t k) {
  if (match(t)) return shift(a, static_cast<int>(k));
  switch (t.kind()) {
    case Term::Kind::App:
      return rebuild_app(t, replace_at(t.fn(), match, a, k), replace_at(t.arg(), match, a, k));
    case Term::Kind::Lam:
      return rebuild_lam(t, replace_at(t.body(), match, a, k + 1));
    default:
      return t;
  }
}

bool has_loose(const Term& t, std::uint32_t k) {
  if (t.loose_bound() <= k) return false;
  switch (t.kind()) {
    case Term::Kind::Bound:
      return t.index() == k;
    case Term::Kind::App:
      return has_loose(t.fn(), k) || has_loose(t.arg(), k);
    case Term::Kind::Lam:
      return has_loose(t.body(), k + 1);
    default:
      return false;
  }
}

Term eta_contract(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::App:
      return rebuild_app(t, eta_contract(t.fn()), eta_contract(t.arg()));
    case Term::Kind::Lam: {
      Term b = eta_contract(t.body());
      if (b.is_app() && b.arg().is_bound() && b.arg().index() == 0 && !has_loose(b.fn(), 0)) {
        return shift(b.fn(), -1);
      }
      return rebuild_lam(t, b);
    }
    default:
      return t;
  }
}

}  // namespace

Term shift(const Term& t, int d, std::uint32_t cutoff) {
  if (d == 0 || t.loose_bound() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Bound: {
      if (t.index() < cutoff) return t;
      long idx = static_cast<long>(t.index()) + d;
      assert(idx >= 0);
      return Term::bound(static_cast<std::uint32_t>(idx), t.type());
    }
    case Term::Kind::App:
      return Term::app(shift(t.fn(), d, cutoff), shift(t.arg(), d, cutoff));
    case Term::Kind::Lam:
      return Term::lam_raw(t.name(), t.binder_type(), shift(t.body(), d, cutoff + 1));
    default:
      return t;
  }
}

Term instantiate(const Term& body, const Term& arg) { return instantiate_at(body, arg, 0); }

Term abstract_var(const Term& t, const std::string& name, const Type& type) {
  bool found = false;
  auto match = [&](const Term& s) { return s.is_var() && s.name() == name && s.type() == type; };
  return abstract_at(t, match, 0, found);
}

Term abstract_const(const Term& t, const std::string& name, const Type& type) {
  bool found = false;
  auto match = [&](const Term& s) { return s.is_const() && s.name() == name && s.type() == type; };
  return abstract_at(t, match, 0, found);
}

std::optional<Term> abstract_subterm(const Term& t, const Term& sub) {
  assert(sub.loose_bound() == 0);
  bool found = false;
  auto match = [&](const Term& s) { return s == sub; };
  Term r = abstract_at(t, match, 0, found);
  if (!found) return std::nullopt;
  return r;
}

Term substitute(const Term& body, const std::string& name, const Type& type, const Term& a) {
  if (a.type() != type) throw TypeError("substitution changes the type of " + name);
  auto match = [&](const Term& s) { return s.is_var() && s.name() == name && s.type() == type; };
  return replace_at(body, match, a, 0);
}

Term substitute_const(const Term& body, const std::string& name, const Type& type,
                      const Term& a) {
  if (a.type() != type) throw TypeError("substitution changes the type of " + name);
  auto match = [&](const Term& s) { return s.is_const() && s.name() == name && s.type() == type; };
  return replace_at(body, match, a, 0);
}

Term beta_normalize(const Term& t) {
  if (!t.has_redex()) return t;
  switch (t.kind()) {
    case Term::Kind::Lam:
      return rebuild_lam(t, beta_normalize(t.body()));
    case Term::Kind::App: {
      std::vector<Term> args;
      Term h = t;
      while (h.is_app()) {
        args.push_back(h.arg());
        h = h.fn();
      }
      // args are in reverse order
      if (h.is_lam()) {
        Term r = instantiate(h.body(), args.back());
        args.pop_back();
        for (auto it = args.rbegin(); it != args.rend(); ++it) r = Term::app(r, *it);
        return beta_normalize(r);
      }
      Term r = h;
      for (auto it = args.rbegin(); it != args.rend(); ++it) r = Term::app(r, beta_normalize(*it));
      return r == t ? t : r;
    }
    default:
      return t;
  }
}

bool is_beta_normal(const Term& t) { return !t.has_redex(); }

Term beta_eta_normalize(const Term& t) { return eta_contract(beta_normalize(t)); }

Term head_of(const Term& t) {
  Term h = t;
  while (h.is_app()) h = h.fn();
  return h;
}

std::vector<Term> args_of(const Term& t) {
  std::vector<Term> args;
  Term h = t;
  while (h.is_app()) {
    args.push_back(h.arg());
    h = h.fn();
  }
  return {args.rbegin(), args.rend()};
}

std::map<std::string, Type> free_vars(const Term& t) {
  std::map<std::string, Type> out;
  std::function<void(const Term&)> go = [&](const Term& s) {
    if (!s.has_free_vars()) return;
    switch (s.kind()) {
      case Term::Kind::Free:
        out.emplace(s.name(), s.type());
        break;
      case Term::Kind::App:
        go(s.fn());
        go(s.arg());
        break;
      case Term::Kind::Lam:
        go(s.body());
        break;
      default:
        break;
    }
  };
  go(t);
  return out;
}

void collect_params(const Term& t, std::map<std::string, Type>& out) {
  switch (t.kind()) {
    case Term::Kind::Const:
      if (!t.is_logical()) out.emplace(t.name(), t.type());
      break;
    case Term::Kind::App:
      collect_params(t.fn(), out);
      collect_params(t.arg(), out);
      break;
    case Term::Kind::Lam:
      collect_params(t.body(), out);
      break;
    default:
      break;
  }
}

std::map<std::string, Type> params_of(const Term& t) {
  std::map<std::string, Type> out;
  collect_params(t, out);
  return out;
}

Term rename_params(const Term& t, const std::map<std::string, std::string>& theta) {
  if (theta.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Const: {
      if (t.is_logical()) return t;
      auto it = theta.find(t.name());
      if (it == theta.end() || it->second == t.name()) return t;
      return Term::constant(it->second, t.type());
    }
    case Term::Kind::App:
      return rebuild_app(t, rename_params(t.fn(), theta), rename_params(t.arg(), theta));
    case Term::Kind::Lam:
      return rebuild_lam(t, rename_params(t.body(), theta));
    default:
      return t;
  }
}

void for_each_subterm(const Term& t, const std::function<void(const Term&, std::uint32_t)>& f) {
  std::function<void(const Term&, std::uint32_t)> go = [&](const Term& s, std::uint32_t depth) {
    f(s, depth);
    if (s.is_app()) {
      go(s.fn(), depth);
      go(s.arg(), depth);
    } else if (s.is_lam()) {
      go(s.body(), depth + 1);
    }
  };
  go(t, 0);
}

std::string fresh_name(const Type& type, const std::set<std::string>& avoid) {
  const std::string base = type.mangle() + "_";
  for (unsigned k = 0;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace cutsim
