#include "doctest.h"

#include <optional>
#include <vector>

#include "cutsim/kernel.hpp"
#include "cutsim/signature.hpp"
#include "cutsim/syntax.hpp"
#include "support/gen_terms.hpp"
#include "support/ref_reducer.hpp"

using namespace cutsim;
using namespace cutsim::testing;

namespace {

constexpr int kTerms = 5000;

}  // namespace

TEST_CASE("beta normalization is idempotent and leaves no redex") {
  TermGen gen(2024);
  for (int k = 0; k < kTerms; ++k) {
    Term t = gen.term(gen.small_type(2), 5);
    Term n = beta_normalize(t);
    REQUIRE(count_redexes(n) == 0);
    REQUIRE(is_beta_normal(n));
    REQUIRE(beta_normalize(n) == n);
  }
}

TEST_CASE("random reduction orders reach the kernel normal form") {
  TermGen gen(77);
  int checked = 0;
  for (int k = 0; k < kTerms; ++k) {
    Term t = gen.term(gen.small_type(2), 5);
    Term want = beta_normalize(t);
    Term cur = t;
    int steps = 0;
    for (std::size_t r; (r = count_redexes(cur)) > 0 && steps < 20000; ++steps) {
      std::size_t pick = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(r) - 1));
      bool done = false;
      cur = contract_at(cur, pick, done);
      REQUIRE(done);
      // subject reduction, one step at a time
      REQUIRE(infer(cur) == t.type());
    }
    REQUIRE(steps < 20000);
    REQUIRE(cur == want);
    ++checked;
  }
  CHECK(checked == kTerms);
}

TEST_CASE("normalization preserves types") {
  TermGen gen(5);
  for (int k = 0; k < kTerms; ++k) {
    Type ty = gen.small_type(2);
    Term t = gen.term(ty, 5);
    REQUIRE(infer(t) == ty);
    Term n = beta_normalize(t);
    REQUIRE(n.type() == ty);
    REQUIRE(infer(n) == ty);
    REQUIRE(infer(beta_eta_normalize(t)) == ty);
  }
}

TEST_CASE("printing then parsing gives back the term") {
  TermGen gen(31);
  for (int k = 0; k < kTerms; ++k) {
    Term t = gen.term(gen.small_type(2), 5);
    if (k % 2) t = beta_normalize(t);
    Signature sig;
    for (const auto& [name, ty] : params_of(t)) sig.declare(name, ty);
    std::string s = print_term(t);
    Term back = parse_term(s, sig);
    REQUIRE_MESSAGE(back == t, s);
  }
}
