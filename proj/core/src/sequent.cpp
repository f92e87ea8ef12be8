#include "cutsim/sequent.hpp"

#include <algorithm>

#include "cutsim/kernel.hpp"

namespace cutsim {

namespace {

bool less(const Term& a, const Term& b) { return compare(a, b) < 0; }

}  // namespace

Sequent::Sequent(std::initializer_list<Term> fs) : Sequent(std::vector<Term>(fs)) {}

Sequent::Sequent(std::vector<Term> fs) : fs_(std::move(fs)) {
  std::sort(fs_.begin(), fs_.end(), less);
  fs_.erase(std::unique(fs_.begin(), fs_.end()), fs_.end());
}

Sequent Sequent::normalized(const std::vector<Term>& fs) {
  std::vector<Term> out;
  out.reserve(fs.size());
  for (const Term& f : fs) out.push_back(beta_normalize(f));
  return Sequent(std::move(out));
}

bool Sequent::contains(const Term& f) const {
  return std::binary_search(fs_.begin(), fs_.end(), f, less);
}

bool Sequent::subset_of(const Sequent& other) const {
  return std::includes(other.fs_.begin(), other.fs_.end(), fs_.begin(), fs_.end(), less);
}

Sequent Sequent::with(const Term& f) const {
  auto it = std::lower_bound(fs_.begin(), fs_.end(), f, less);
  if (it != fs_.end() && *it == f) return *this;
  Sequent out = *this;
  out.fs_.insert(out.fs_.begin() + (it - fs_.begin()), f);
  return out;
}

Sequent Sequent::with(const Sequent& other) const {
  Sequent out;
  std::set_union(fs_.begin(), fs_.end(), other.fs_.begin(), other.fs_.end(),
                 std::back_inserter(out.fs_), less);
  return out;
}

Sequent Sequent::without(const Term& f) const {
  auto it = std::lower_bound(fs_.begin(), fs_.end(), f, less);
  if (it == fs_.end() || *it != f) return *this;
  Sequent out = *this;
  out.fs_.erase(out.fs_.begin() + (it - fs_.begin()));
  return out;
}

Sequent Sequent::without(const Sequent& other) const {
  Sequent out;
  std::set_difference(fs_.begin(), fs_.end(), other.fs_.begin(), other.fs_.end(),
                      std::back_inserter(out.fs_), less);
  return out;
}

std::map<std::string, Type> Sequent::params() const {
  std::map<std::string, Type> out;
  for (const Term& f : fs_) collect_params(f, out);
  return out;
}

std::set<std::string> Sequent::param_names() const {
  std::set<std::string> out;
  for (const auto& kv : params()) out.insert(kv.first);
  return out;
}

bool Sequent::well_formed() const {
  return std::all_of(fs_.begin(), fs_.end(), [](const Term& f) {
    return f.is_closed() && f.type().is_o() && is_beta_normal(f);
  });
}

bool operator<(const Sequent& a, const Sequent& b) {
  return std::lexicographical_compare(a.fs_.begin(), a.fs_.end(), b.fs_.begin(), b.fs_.end(),
                                      less);
}

std::size_t Sequent::hash() const {
  std::size_t h = 0x5e9;
  for (const Term& f : fs_) h ^= f.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace cutsim
