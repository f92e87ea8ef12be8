#include "cutsim/signature.hpp"

#include <stdexcept>

#include "cutsim/kernel.hpp"
#include "cutsim/term.hpp"

namespace cutsim {

bool Signature::is_logical_name(const std::string& name) {
  return name == Term::kNot || name == Term::kOr || name == Term::kPi;
}

void Signature::declare(const std::string& name, const Type& type) {
  if (is_logical_name(name)) throw std::invalid_argument("cannot redeclare logical constant " + name);
  auto [it, inserted] = params_.emplace(name, type);
  if (!inserted && it->second != type) {
    throw std::invalid_argument("parameter " + name + " already declared with type " +
                                it->second.str());
  }
}

std::optional<Type> Signature::lookup(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) return std::nullopt;
  return it->second;
}

std::string Signature::fresh(const Type& type, const std::set<std::string>& avoid) const {
  std::set<std::string> all = avoid;
  for (const auto& kv : params_) all.insert(kv.first);
  return fresh_name(type, all);
}

}  // namespace cutsim
