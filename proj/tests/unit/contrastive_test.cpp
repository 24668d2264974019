#include <doctest.h>

#include "argex/contrastive.hpp"
#include "argex/io/apx.hpp"
#include "support/oracle.hpp"

using namespace argex;
using argex::testing::read_fixture;
using argex::testing::set;

namespace {

ArgSet common(const ContrastiveResult& c) { return c.kind == ContrastKind::Common ? c.common : ArgSet{}; }

}  // namespace

TEST_SUITE("contrastive") {
  TEST_CASE("acceptance contrasts on the six-argument example") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const ArgIndex a = af.index("A");
    CHECK(common(cont_acc(prf, Strategy::Credulous, a, set(af, {"D"}))) == set(af, {"E"}));
    CHECK(common(cont_acc(prf, Strategy::Credulous, a, set(af, {"B"}))) == set(af, {"C"}));
    const auto both = cont_acc(prf, Strategy::Credulous, a, set(af, {"B", "D"}));
    CHECK(both.kind == ContrastKind::Common);
    CHECK(both.common == set(af, {"C", "E"}));
    CHECK(both.fact_side == set(af, {"C", "E"}));
  }

  TEST_CASE("non-acceptance contrasts") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const ArgIndex a = af.index("A");
    CHECK(common(cont_nonacc(prf, Strategy::Skeptical, a, set(af, {"B"}))) == set(af, {"B"}));
    CHECK(common(cont_nonacc(prf, Strategy::Skeptical, a, set(af, {"D"}))) == set(af, {"F"}));
    const ArgIndex d = af.index("D");
    CHECK(common(cont_nonacc(prf, Strategy::Skeptical, d, derive_foil(af, d))) == set(af, {"E"}));
  }

  TEST_CASE("derived foils are the direct attackers") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    CHECK(derive_foil(af, af.index("A")) == set(af, {"B", "D"}));
    CHECK(derive_foil(af, af.index("B")) == set(af, {"C"}));
    CHECK(derive_foil(af, af.index("D")) == set(af, {"E"}));
    const Framework sa = io::parse_af(read_fixture("self_attack.apx"));
    CHECK(derive_foil(sa, sa.index("S")).contains(sa.index("S")));
    CHECK(derive_foil(sa, sa.index("C")).empty());
  }

  TEST_CASE("a foil sharing an extension is not applicable") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const auto report =
        check_applicability(prf, Strategy::Credulous, af.index("A"), set(af, {"C"}), Direction::Acceptance);
    CHECK_FALSE(report.ok());
    CHECK(report.violates(Condition::NeverCoexist));
    CHECK(report.violates(Condition::ConflictRelevance));
    CHECK_FALSE(report.violates(Condition::AcceptanceStatus));
    CHECK_THROWS_AS((void)cont_acc(prf, Strategy::Credulous, af.index("A"), set(af, {"C"})), ApplicabilityError);
  }

  TEST_CASE("status shortfalls") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const auto report =
        check_applicability(prf, Strategy::Skeptical, af.index("A"), set(af, {"B"}), Direction::Acceptance);
    CHECK(report.violates(Condition::AcceptanceStatus));
    const AcceptanceStatus st = prf.status(af.index("A"));
    CHECK_FALSE(status_shortfall(st, true, Strategy::Credulous).has_value());
    CHECK(status_shortfall(st, true, Strategy::Skeptical).has_value());
    CHECK_FALSE(status_shortfall(st, false, Strategy::Skeptical).has_value());
  }

  TEST_CASE("a self-attacking foil fails conflict-relevance") {
    const Framework af = io::parse_af(read_fixture("self_attack.apx"));
    const Evaluation grd(af, Semantics::Grounded);
    const ArgIndex a = af.index("A");
    const auto report = check_applicability(grd, Strategy::Skeptical, a, derive_foil(af, a), Direction::Acceptance);
    CHECK(report.violates(Condition::ConflictRelevance));
    CHECK_FALSE(report.violates(Condition::NeverCoexist));
  }

  TEST_CASE("a fact among its own foils is reported, not rejected") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const ArgIndex a = af.index("A");
    const auto report = check_applicability(prf, Strategy::Credulous, a, set(af, {"A", "B"}), Direction::Acceptance);
    CHECK_FALSE(report.ok());
    CHECK_THROWS_AS((void)check_applicability(prf, Strategy::Credulous, a, ArgSet{}, Direction::Acceptance),
                    InputError);
  }

  TEST_CASE("combination prefers an intersecting candidate") {
    const std::vector<ArgSet> fact{{1}, {2}};
    const std::vector<std::vector<ArgSet>> foils{{{3}, {2}}};
    const auto c = combine_contrast(fact, foils);
    CHECK(c.kind == ContrastKind::Common);
    CHECK(c.common == ArgSet{2});
    CHECK(c.fact_side == ArgSet{2});
    CHECK(c.foil_side == ArgSet{2});
  }

  TEST_CASE("combination falls back to the canonical picks") {
    const std::vector<ArgSet> fact{{1}, {4}};
    const std::vector<std::vector<ArgSet>> foils{{{3}, {2}}, {{5}}};
    const auto c = combine_contrast(fact, foils);
    CHECK(c.kind == ContrastKind::Pair);
    CHECK(c.common.empty());
    CHECK(c.fact_side == ArgSet{1});
    CHECK(c.foil_side == ArgSet{3, 5});
  }

  TEST_CASE("names") {
    CHECK(to_string(Direction::Acceptance) == "acc");
    CHECK(to_string(Direction::NonAcceptance) == "nonacc");
  }
}
