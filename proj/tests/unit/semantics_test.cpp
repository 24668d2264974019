#include <doctest.h>

#include "argex/errors.hpp"
#include "argex/io/apx.hpp"
#include "argex/semantics.hpp"
#include "support/oracle.hpp"

using namespace argex;
using argex::testing::read_fixture;
using argex::testing::set;

namespace {

std::vector<ArgSet> sets(const Framework& af, std::initializer_list<std::initializer_list<const char*>> groups) {
  std::vector<ArgSet> out;
  for (auto g : groups) out.push_back(set(af, g));
  canonicalize(out);
  return out;
}

}  // namespace

TEST_SUITE("semantics") {
  TEST_CASE("names round-trip") {
    for (Semantics s : kAllSemantics) CHECK(parse_semantics(to_string(s)) == s);
    CHECK_FALSE(parse_semantics("ideal").has_value());
    CHECK(parse_strategy("credulous") == Strategy::Credulous);
    CHECK(dagger(Strategy::Skeptical) == Strategy::Credulous);
    CHECK(dagger(dagger(Strategy::Credulous)) == Strategy::Credulous);
  }

  TEST_CASE("six-argument example") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const auto preferred = sets(af, {{"A", "C", "E"}, {"B", "D", "F"}, {"B", "E"}, {"C", "D", "F"}});
    CHECK(extensions(af, Semantics::Preferred) == preferred);
    CHECK(extensions(af, Semantics::SemiStable) == preferred);
    CHECK(extensions(af, Semantics::Stable) == preferred);
    CHECK(extensions(af, Semantics::Grounded) == std::vector<ArgSet>{ArgSet{}});
    const auto complete = extensions(af, Semantics::Complete);
    CHECK(complete.size() == 9);
    CHECK(complete.front().empty());
    const auto admissible = extensions(af, Semantics::Admissible);
    for (const auto& e : complete) CHECK(std::find(admissible.begin(), admissible.end(), e) != admissible.end());
  }

  TEST_CASE("grounded extension of a chain") {
    const Framework af({"A", "B", "C", "D"}, {{"A", "B"}, {"B", "C"}, {"C", "D"}});
    CHECK(grounded_extension(af) == set(af, {"A", "C"}));
    CHECK(extensions(af, Semantics::Preferred) == sets(af, {{"A", "C"}}));
  }

  TEST_CASE("odd cycle has no stable extension") {
    const Framework af = io::parse_af(read_fixture("odd_cycle.apx"));
    CHECK(extensions(af, Semantics::Stable).empty());
    CHECK(extensions(af, Semantics::Preferred) == std::vector<ArgSet>{ArgSet{}});
    const Evaluation stable(af, Semantics::Stable);
    CHECK_THROWS_AS((void)stable.status(0), PreconditionError);
  }

  TEST_CASE("self-attackers are never members") {
    const Framework af = io::parse_af(read_fixture("self_attack.apx"));
    for (Semantics s : kAllSemantics) {
      for (const auto& e : extensions(af, s)) CHECK_FALSE(e.contains(af.index("S")));
    }
    CHECK(grounded_extension(af) == set(af, {"A", "C"}));
  }

  TEST_CASE("empty framework") {
    const Framework af;
    for (Semantics s : kAllSemantics) CHECK(extensions(af, s) == std::vector<ArgSet>{ArgSet{}});
  }

  TEST_CASE("conflict-freeness and defence") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    CHECK(conflict_free(af, set(af, {"A", "C", "E"})));
    CHECK_FALSE(conflict_free(af, set(af, {"A", "B"})));
    CHECK(defends(af, set(af, {"C", "E"}), af.index("A")));
    CHECK_FALSE(defends(af, set(af, {"C"}), af.index("A")));
    CHECK(attacked_by(af, set(af, {"E"})) == set(af, {"D", "F"}));
    CHECK_THROWS_AS((void)conflict_free(af, ArgSet{99}), InputError);
  }

  TEST_CASE("acceptance flags") {
    const Framework af = io::parse_af(read_fixture("af1.apx"));
    const Evaluation prf(af, Semantics::Preferred);
    const AcceptanceStatus a = prf.status(af.index("A"));
    CHECK(a.credulously_accepted);
    CHECK_FALSE(a.skeptically_accepted);
    CHECK(a.skeptically_non_accepted);
    CHECK_FALSE(a.credulously_non_accepted);
    CHECK(prf.with(af.index("A")).size() == 1);
    CHECK(prf.without(af.index("A")).size() == 3);
    CHECK(status_from_counts(2, 0) == AcceptanceStatus{true, true, false, false});
    CHECK(status_from_counts(0, 2) == AcceptanceStatus{false, false, true, true});
    CHECK(acceptance_status(af, Semantics::Grounded, af.index("A")).credulously_non_accepted);
  }

  TEST_CASE("extensions match the brute-force oracle") {
    for (const auto& af : argex::testing::af_corpus()) {
      for (Semantics s : kAllSemantics) {
        REQUIRE(extensions(af, s) == argex::testing::brute_extensions(af, s));
      }
    }
  }
}
