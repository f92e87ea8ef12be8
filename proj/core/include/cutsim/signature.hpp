#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "cutsim/type.hpp"

namespace cutsim {

// Declared parameters. The logical constants are implicit and may not be
// redeclared.
class Signature {
 public:
  // Throws std::invalid_argument for a logical name or a conflicting type.
  // Redeclaring a name with the same type is a no-op.
  void declare(const std::string& name, const Type& type);
  std::optional<Type> lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return params_.count(name) > 0; }
  const std::map<std::string, Type>& params() const { return params_; }

  // Fresh parameter name for `type`, avoiding declared names and `avoid`.
  std::string fresh(const Type& type, const std::set<std::string>& avoid = {}) const;

  static bool is_logical_name(const std::string& name);

 private:
  std::map<std::string, Type> params_;
};

}  // namespace cutsim
