#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "gtrs/oracle.hpp"
#include "support/systems.hpp"

using namespace gtrs;

namespace {

std::string rules_of(std::string_view text) { return print_problem(parse_trs(text)); }

void check_error(std::string_view text, std::size_t line, std::size_t column,
                 std::string_view message) {
  try {
    parse_problem(text);
    FAIL("accepted: ", text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK(std::string(e.what()).find(message) != std::string::npos);
  }
}

} // namespace

TEST_CASE("the running examples parse") {
  Trs u = parse_trs(gtrs::testing::system_u);
  CHECK(u.rules.size() == 3);
  CHECK(to_string(u.store, u.rules[0].lhs) == "f(a)");
  CHECK(print_problem(u) == "(RULES\n  f(a) -> a\n  f(a) -> b\n  a -> a\n)\n");
}

TEST_CASE("commas between rules are optional") {
  CHECK(rules_of("(RULES a -> b c -> d)") == rules_of("(RULES a -> b, c -> d)"));
}

TEST_CASE("unused variables are allowed") {
  CHECK(parse_trs("(VAR x) (RULES a -> b)").rules.size() == 1);
}

TEST_CASE("declared variables in rules are rejected with a position") {
  check_error("(VAR x)\n(RULES f(x) -> a)", 2, 10, "variable x in rule 1");
  check_error("(VAR y)\n(RULES\n  a -> b\n  b -> g(a, y)\n)", 4, 13, "variable y in rule 2");
}

TEST_CASE("syntax and arity errors carry a position") {
  check_error("(RULES a -> )", 1, 13, "expected a symbol");
  check_error("(RULES f(a) -> f(a, b))", 1, 16, "arity");
  check_error("(RULES a b)", 1, 10, "'->'");
  check_error("(STRATEGY INNERMOST)", 1, 2, "unsupported block");
  check_error("(COMMENT (unbalanced)", 1, 1, "unterminated");
  check_error("(RULES a -> b", 1, 14, "end of input");
}

TEST_CASE("comments may nest parentheses and survive printing") {
  ProblemFile p = parse_problem("(COMMENT see (this) too) (RULES a -> b)");
  REQUIRE(p.comment);
  CHECK(*p.comment == "see (this) too");
  ProblemFile again = parse_problem(print_problem(p.trs, p.comment));
  CHECK(again.comment == p.comment);
}

TEST_CASE("columns count characters, not bytes") {
  check_error("(VAR x) (RULES ∘∘ -> x)", 1, 16, "expected a symbol");
}

TEST_CASE("print then parse is a fixpoint on random systems") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    oracle::TrsGenSpec spec;
    spec.seed = seed;
    spec.rules = seed % 6;
    Trs t = oracle::gen_random_trs(spec);
    std::string once = print_problem(t);
    std::string twice = print_problem(parse_trs(once));
    CHECK(once == twice);
  }
}

TEST_CASE("files") {
  auto dir = std::filesystem::temp_directory_path() / "gtrs_cops_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "u.trs") << gtrs::testing::system_u;
  CHECK(read_problem((dir / "u.trs").string()).trs.rules.size() == 3);
  CHECK_THROWS_AS(read_problem((dir / "missing.trs").string()), IoError);
  CHECK_THROWS_AS(read_problem(dir.string()), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("curried terms") {
  CurriedTrs c = curry(parse_trs(gtrs::testing::system_u));
  TermId x = parse_curried_term("f ∘ a ∘ b", c);
  CHECK(display_curried(c, x) == "f∘a∘b");
  CHECK(parse_curried_term("f(a)", c) == parse_curried_term("f∘a", c));
  CHECK(parse_curried_term("f∘(f∘b)", c) == parse_curried_term("f(f(b))", c));
  CHECK_THROWS_AS(parse_curried_term("f∘", c), ParseError);
  CHECK_THROWS_AS(parse_curried_term("a b", c), ParseError);
}
