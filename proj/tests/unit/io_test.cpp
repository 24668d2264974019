#include <doctest.h>

#include "argex/errors.hpp"
#include "argex/io/apx.hpp"
#include "argex/io/cli.hpp"
#include "argex/io/envelope.hpp"
#include "argex/io/theory_format.hpp"
#include "support/io_checks.hpp"
#include "support/oracle.hpp"

using namespace argex;
using argex::testing::fixture_path;
using argex::testing::read_fixture;
using argex::testing::run;

TEST_SUITE("io") {
  TEST_CASE("framework text") {
    const Framework af = io::parse_af("% comment\narg(B). arg(A).\n  att(A,B).\n");
    CHECK(af.size() == 2);
    CHECK(af.attacks(af.index("A"), af.index("B")));
    CHECK(io::print_af(af) == "arg(A).\narg(B).\natt(A,B).\n");
    CHECK(io::parse_af("") == Framework{});
  }

  TEST_CASE("framework errors carry positions") {
    try {
      (void)io::parse_af("arg(A).\natt(A,B).\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS((void)io::parse_af("arg(A)"), ParseError);
    CHECK_THROWS_AS((void)io::parse_af("arg(A). arg(A)."), ParseError);
  }

  TEST_CASE("theory text") {
    const auto t = io::parse_theory("axiom a. premise ~b.\nstrict s1: a -> c.\ndefeasible d1: c, ~b => ~n(s1).\n");
    CHECK(t.axioms.size() == 1);
    CHECK(t.premises.front().negated());
    REQUIRE(t.rules.size() == 2);
    CHECK(t.rules[0].kind == aspic::RuleKind::Strict);
    CHECK(t.rules[1].to_string() == "d1: c, ~b => ~n(s1)");
    CHECK(io::parse_theory(io::print_theory(t)) == t);
    CHECK(io::parse_literal("~~~q").to_string() == "~q");
    CHECK_THROWS_AS((void)io::parse_literal("~"), ParseError);
  }

  TEST_CASE("envelopes round-trip") {
    io::QueryResultEnvelope env;
    env.query = {"contrast", "x.apx", "af", "A", {"B"}, false, "acc", std::nullopt};
    env.semantics = "preferred";
    env.strategy = "credulous";
    env.result = io::ContrastResult{"acc", {"B"}, true, {}, {"C"}, {"B"}};
    env.applicability = std::vector<io::ViolationRecord>{};
    const std::string text = io::serialize(env);
    CHECK(io::deserialize(text) == env);
    CHECK(io::serialize(io::deserialize(text)) == text);
    CHECK(text.back() == '\n');
    CHECK_THROWS_AS((void)io::deserialize("{"), InputError);
  }

  TEST_CASE("command line text output") {
    const auto r = run({"extensions", "--input", fixture_path("af1.apx"), "--semantics", "grounded"});
    CHECK(r.exit_code == io::kExitOk);
    CHECK(r.out == "{}\n");
    const auto s = run({"status", "--input", fixture_path("at3.thy"), "--fact", "x"});
    CHECK(s.exit_code == io::kExitOk);
    CHECK(s.out == "x: not concluded\n");
  }

  TEST_CASE("precondition failures still report") {
    const auto r = run({"explain", "--input", fixture_path("af1.apx"), "--semantics", "grounded", "--fact", "A",
                        "--direction", "acc", "--format", "json"});
    CHECK(r.exit_code == io::kExitPreconditionError);
    const auto env = io::deserialize(r.out);
    CHECK(env.error.has_value());
  }

  TEST_CASE("parser round-trip matrix") {
    const auto r = argex::testing::parser_roundtrip();
    INFO(r.summary());
    for (const auto& e : r.examples) INFO(e);
    CHECK(r.holds());
  }

  TEST_CASE("error class matrix") {
    const auto r = argex::testing::error_matrix();
    INFO(r.summary());
    for (const auto& e : r.examples) INFO(e);
    CHECK(r.holds());
  }
}
