// Property suites over the random corpora. Where a property has
// counterexamples, the tests pin the largest scope on which it holds and
// one concrete counterexample outside it.

#include <doctest.h>

#include "argex/aspic/formula.hpp"
#include "argex/contrastive.hpp"
#include "argex/explanations.hpp"
#include "argex/io/apx.hpp"
#include "argex/io/theory_format.hpp"
#include "argex/relations.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace argex;
using namespace argex::testing;

namespace {

void require_holds(const PropertyResult& r) {
  INFO(r.summary());
  for (const auto& e : r.examples) INFO(e);
  CHECK(r.checked > 0);
  CHECK(r.holds());
}

const std::vector<aspic::Theory>& fragment() {
  static const auto corpus = theory_corpus({false, false}, 2025);
  return corpus;
}

const std::vector<aspic::Theory>& general() {
  static const auto corpus = theory_corpus({}, 2024);
  return corpus;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("extension invariants") { require_holds(extension_invariants(af_corpus())); }
  TEST_CASE("walk closure") { require_holds(walk_closure(af_corpus())); }
  TEST_CASE("explanation oracle") { require_holds(explanation_oracle(af_corpus())); }
  TEST_CASE("defence propagation") { require_holds(defence_propagation(af_corpus())); }
  TEST_CASE("empty acceptance explanation") { require_holds(empty_acceptance(af_corpus())); }
  TEST_CASE("non-empty non-acceptance explanation") { require_holds(nonempty_non_acceptance(af_corpus())); }
  TEST_CASE("acceptance and non-acceptance duality") { require_holds(acceptance_duality(af_corpus())); }
  TEST_CASE("contrast form with derived foil") { require_holds(derived_foil_contrast_form(af_corpus())); }
  TEST_CASE("explanation relevance apart from self-attackers") {
    require_holds(explanation_relevance(af_corpus()));
  }
  TEST_CASE("derived foil applicability without self-attacking foils") {
    require_holds(derived_foil_applicability_without_self_attackers(af_corpus()));
  }

  TEST_CASE("structured arguments and derived frameworks") {
    require_holds(structural(general()));
    require_holds(derived_faithfulness(general()));
  }
  TEST_CASE("formula explanation emptiness") {
    require_holds(formula_explanation_emptiness(general()));
    require_holds(formula_explanation_emptiness(fragment()));
  }
  TEST_CASE("formula foil applicability on premises and defeasible rules") {
    require_holds(formula_foil_applicability(fragment()));
  }
  TEST_CASE("formula contrast form on premises and defeasible rules") {
    require_holds(formula_foil_contrast_form(fragment()));
  }

  TEST_CASE("counterexample: self-attacking derived foil") {
    const Framework af = io::parse_af(read_fixture("self_attack.apx"));
    const Evaluation grd(af, Semantics::Grounded);
    const ArgIndex a = af.index("A");
    REQUIRE(grd.status(a).skeptically_accepted);
    REQUIRE(grd.status(af.index("S")).credulously_non_accepted);
    const auto report = check_applicability(grd, Strategy::Skeptical, a, derive_foil(af, a), Direction::Acceptance);
    CHECK(report.violates(Condition::ConflictRelevance));
  }

  TEST_CASE("counterexample: self-attackers in undefended attackers") {
    const Framework af = io::parse_af(read_fixture("self_attack.apx"));
    const ArgIndex s = af.index("S");
    const ArgSet nd = not_def(af, af.index("A"), ArgSet{});
    CHECK(nd.contains(s));
    CHECK_FALSE(conflict_relevant(af, s, af.index("A")));
    CHECK_FALSE(explanation_relevance_strict(af_corpus()).holds());
  }

  TEST_CASE("counterexample: disjoint contrast for conflict-relevant distinct arguments") {
    const Framework af({"A", "B", "C", "D", "E", "F"},
                       {{"A", "B"}, {"A", "D"}, {"A", "F"}, {"B", "A"}, {"B", "F"}, {"C", "B"}, {"C", "F"},
                        {"D", "B"}, {"D", "C"}, {"D", "E"}, {"E", "D"}, {"E", "F"}, {"F", "A"}, {"F", "B"}});
    const Evaluation prf(af, Semantics::Preferred);
    const ArgIndex a = af.index("A");
    const ArgIndex c = af.index("C");
    REQUIRE(prf.extensions() == std::vector<ArgSet>{set(af, {"D", "F"}), set(af, {"A", "C", "E"})});
    CHECK(conflict_relevant(af, a, c));
    const auto acc = alternatives(acc_explanation(prf, Strategy::Credulous, a));
    REQUIRE(acc.size() == 1);
    CHECK(acc.front() == set(af, {"A", "C", "E"}));
    const ArgSet nonacc = nonacc_explanation(prf, Strategy::Skeptical, c);
    CHECK(nonacc == set(af, {"D", "F"}));
    CHECK_FALSE(acc.front().intersects(nonacc));
  }

  TEST_CASE("counterexample: an axiom and a strict rule conclude a literal and its negation") {
    const auto sf =
        aspic::StructuredFramework::derive(io::parse_theory("axiom a. premise b. strict s: b -> ~a."));
    CHECK(sf.framework().attack_count() == 0);
    const aspic::StructuredEvaluation se(sf, Semantics::Admissible);
    const auto a = io::parse_literal("a");
    const auto foils = aspic::formula_foil(sf, a);
    REQUIRE(foils == aspic::LiteralSet{io::parse_literal("~a")});
    const auto report = aspic::check_formula_applicability(se, Strategy::Credulous, a, foils, Direction::Acceptance);
    CHECK_FALSE(report.violates(Condition::AcceptanceStatus));
    CHECK(report.violates(Condition::NeverCoexist));
    CHECK(report.violates(Condition::ConflictRelevance));
  }
}
