#include "cutsim/term.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "cutsim/errors.hpp"
#include "cutsim/kernel.hpp"

namespace cutsim {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::bound(std::uint32_t index, const Type& type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bound;
  n->type = type;
  n->index = index;
  n->hash = mix(0xb0, index);
  n->loose = index + 1;
  return Term(std::move(n));
}

Term Term::var(const std::string& name, const Type& type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Free;
  n->name = name;
  n->type = type;
  n->hash = mix(mix(0xf4, std::hash<std::string>{}(name)), type.hash());
  n->has_free = true;
  return Term(std::move(n));
}

Term Term::constant(const std::string& name, const Type& type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->name = name;
  n->type = type;
  n->hash = mix(mix(0xc0, std::hash<std::string>{}(name)), type.hash());
  return Term(std::move(n));
}

Term Term::app(const Term& fn, const Term& arg) {
  const Type& ft = fn.type();
  if (!ft.is_fun() || ft.domain() != arg.type()) {
    throw TypeError("cannot apply term of type " + ft.str() + " to argument of type " +
                    arg.type().str());
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->type = ft.codomain();
  n->left = fn;
  n->right = arg;
  n->hash = mix(mix(0xa9, fn.hash()), arg.hash());
  n->size = fn.size() + arg.size() + 1;
  n->loose = std::max(fn.loose_bound(), arg.loose_bound());
  n->has_free = fn.has_free_vars() || arg.has_free_vars();
  n->normal = !fn.is_lam() && !fn.has_redex() && !arg.has_redex();
  return Term(std::move(n));
}

Term Term::app(const Term& fn, std::initializer_list<Term> args) {
  Term t = fn;
  for (const Term& a : args) t = app(t, a);
  return t;
}

Term Term::app(const Term& fn, const std::vector<Term>& args) {
  Term t = fn;
  for (const Term& a : args) t = app(t, a);
  return t;
}

Term Term::lam_raw(const std::string& hint, const Type& binder, const Term& body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lam;
  n->name = hint;
  n->binder = binder;
  n->type = Type::fun(binder, body.type());
  n->left = body;
  n->hash = mix(mix(0x1a, binder.hash()), body.hash());
  n->size = body.size() + 1;
  n->loose = body.loose_bound() > 0 ? body.loose_bound() - 1 : 0;
  n->has_free = body.has_free_vars();
  n->normal = !body.has_redex();
  return Term(std::move(n));
}

Term Term::lam(const std::string& name, const Type& type, const Term& body) {
  return lam_raw(name, type, abstract_var(body, name, type));
}

Term::Kind Term::kind() const { return node_->kind; }

bool Term::is_logical() const {
  if (!is_const()) return false;
  const std::string& n = node_->name;
  return n == kNot || n == kOr || n == kPi;
}

const Type& Term::type() const { return node_->type; }
const std::string& Term::name() const { return node_->name; }
std::uint32_t Term::index() const { return node_->index; }
const Term& Term::fn() const {
  assert(is_app());
  return node_->left;
}
const Term& Term::arg() const {
  assert(is_app());
  return node_->right;
}
const Term& Term::body() const {
  assert(is_lam());
  return node_->left;
}
const Type& Term::binder_type() const {
  assert(is_lam());
  return node_->binder;
}
std::size_t Term::hash() const { return node_->hash; }
std::uint32_t Term::size() const { return node_->size; }
std::uint32_t Term::loose_bound() const { return node_->loose; }
bool Term::has_free_vars() const { return node_->has_free; }
bool Term::has_redex() const { return !node_->normal; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Free:
    case Term::Kind::Const:
      return a.name() == b.name() && a.type() == b.type();
    case Term::Kind::App:
      return a.fn() == b.fn() && a.arg() == b.arg();
    case Term::Kind::Lam:
      return a.binder_type() == b.binder_type() && a.body() == b.body();
  }
  return false;
}

int compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::Bound:
      if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
      return 0;
    case Term::Kind::Free:
    case Term::Kind::Const:
      if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
      if (a.type() == b.type()) return 0;
      return a.type() < b.type() ? -1 : 1;
    case Term::Kind::App:
      if (int c = compare(a.fn(), b.fn()); c != 0) return c;
      return compare(a.arg(), b.arg());
    case Term::Kind::Lam:
      if (a.binder_type() != b.binder_type()) return a.binder_type() < b.binder_type() ? -1 : 1;
      return compare(a.body(), b.body());
  }
  return 0;
}

}  // namespace cutsim
