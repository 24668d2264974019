#include <doctest.h>

#include "argex/errors.hpp"
#include "argex/explanations.hpp"
#include "argex/io/apx.hpp"
#include "support/oracle.hpp"

using namespace argex;
using argex::testing::read_fixture;
using argex::testing::set;

namespace {

// c reaches a only through y, which w attacks; u reaches a directly.
Framework intercepted_chain() {
  return Framework({"a", "b", "c", "u", "w", "x", "y", "z"},
                   {{"c", "x"}, {"x", "y"}, {"y", "z"}, {"z", "b"}, {"b", "a"}, {"w", "y"}, {"u", "z"}});
}

}  // namespace

TEST_SUITE("explanations") {
  TEST_CASE("defenders and undefended attackers") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    CHECK(def_by(af, af.index("A")) == set(af, {"C", "E"}));
    CHECK(def_by(af, af.index("D")) == set(af, {"F"}));
    CHECK(def_by_in(af, af.index("A"), set(af, {"A", "C", "E"})) == set(af, {"C", "E"}));
    CHECK(not_def(af, af.index("A"), set(af, {"B", "D", "F"})) == set(af, {"B", "D", "F"}));
    CHECK(not_def(af, af.index("A"), set(af, {"B", "E"})) == set(af, {"B"}));
  }

  TEST_CASE("undefended attackers need not be members") {
    const Framework af = io::parse_af(read_fixture("af2.apx"));
    CHECK(not_def(af, af.index("C"), set(af, {"B"})) == set(af, {"B", "D", "E", "F"}));
    CHECK(def_by_in(af, af.index("B"), set(af, {"B"})) == set(af, {"B"}));
  }

  TEST_CASE("interception reading agrees on the worked examples") {
    const Framework af1 = io::parse_af(read_fixture("af1.apx"));
    CHECK(not_def_intercepted(af1, af1.index("A"), set(af1, {"B", "D", "F"})) == set(af1, {"B", "D", "F"}));
    CHECK(not_def_intercepted(af1, af1.index("A"), set(af1, {"B", "E"})) == set(af1, {"B"}));
    const Framework af2 = io::parse_af(read_fixture("af2.apx"));
    CHECK(not_def_intercepted(af2, af2.index("C"), set(af2, {"B"})) == set(af2, {"B", "D", "E", "F"}));
  }

  TEST_CASE("interception reading is stricter on an intercepted chain") {
    const Framework af = intercepted_chain();
    const ArgSet e = set(af, {"b", "c", "u", "w"});
    CHECK(not_def(af, af.index("a"), e) == set(af, {"b", "c", "u"}));
    CHECK(not_def_intercepted(af, af.index("a"), e) == set(af, {"b", "u"}));
  }

  TEST_CASE("acceptance explanations") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const auto acc = acc_explanation(prf, Strategy::Credulous, af.index("A"));
    CHECK(chosen(acc) == set(af, {"C", "E"}));
    const auto& cands = std::get<CredulousCandidates>(acc);
    REQUIRE(cands.candidates.size() == 1);
    CHECK(cands.candidates.front().extension == set(af, {"A", "C", "E"}));
    CHECK(chosen(acc_explanation(prf, Strategy::Credulous, af.index("D"))) == set(af, {"F"}));
    CHECK_THROWS_AS((void)acc_explanation(prf, Strategy::Skeptical, af.index("A")), PreconditionError);
  }

  TEST_CASE("credulous candidates keep every extension") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const auto acc = acc_explanation(prf, Strategy::Credulous, af.index("E"));
    const auto& cands = std::get<CredulousCandidates>(acc);
    CHECK(cands.candidates.size() == 2);
    const auto alts = alternatives(acc);
    CHECK(alts.front() == cands.pick());
    CHECK(cands.ranking().front() == cands.canonical_pick);
  }

  TEST_CASE("skeptical acceptance of an unattacked argument is empty") {
    const Framework af({"A", "B"}, {{"A", "B"}});
    const Evaluation grd(af, Semantics::Grounded);
    const auto acc = acc_explanation(grd, Strategy::Skeptical, af.index("A"));
    CHECK(std::holds_alternative<ArgSet>(acc));
    CHECK(chosen(acc).empty());
    CHECK(alternatives(acc).size() == 1);
  }

  TEST_CASE("non-acceptance explanations") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    CHECK(nonacc_explanation(prf, Strategy::Skeptical, af.index("A")) == set(af, {"B", "D", "F"}));
    CHECK(nonacc_explanation(prf, Strategy::Skeptical, af.index("D")) == set(af, {"E"}));
    CHECK_THROWS_AS((void)nonacc_explanation(prf, Strategy::Credulous, af.index("A")), PreconditionError);
  }

  TEST_CASE("explanations match the walk oracle") {
    for (const auto& af : argex::testing::af_corpus()) {
      for (const auto& e : extensions(af, Semantics::Complete)) {
        for (ArgIndex a = 0; a < af.size(); ++a) {
          REQUIRE(not_def(af, a, e) == argex::testing::brute_not_def(af, a, e));
          REQUIRE(def_by_in(af, a, e) == argex::testing::brute_def_by_in(af, a, e));
          REQUIRE(not_def_intercepted(af, a, e).is_subset_of(not_def(af, a, e)));
        }
      }
    }
  }
}
