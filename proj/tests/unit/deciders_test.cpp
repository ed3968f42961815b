#include <set>

#include "doctest.h"

#include "gtrs/oracle.hpp"
#include "support/systems.hpp"

using namespace gtrs;
using gtrs::testing::analyse;
using gtrs::testing::flat;

namespace {

std::array<bool, 4> verdicts(std::string_view text) {
  auto a = analyse(text);
  auto v = a->decide_all();
  return {v[0].holds, v[1].holds, v[2].holds, v[3].holds};
}

std::set<std::string> pair(Analysis& a, const Witness& w) {
  return {a.display(w.s), a.display(w.t)};
}

} // namespace

TEST_CASE("verdicts of the running examples") {
  using V = std::array<bool, 4>;  // CR, NFP, UNC, UNR
  CHECK(verdicts(gtrs::testing::system_u) == V{false, false, false, false});
  CHECK(verdicts(gtrs::testing::system_v) == V{true, true, true, true});
  CHECK(verdicts(gtrs::testing::system_w) == V{false, true, true, true});
  CHECK(verdicts(gtrs::testing::system_peak) == V{false, false, false, false});
  CHECK(verdicts("(RULES)") == V{true, true, true, true});
}

TEST_CASE("UNC witness of U") {
  auto a = analyse(gtrs::testing::system_u);
  Verdict v = a->decide(Property::unc);
  REQUIRE(v.witness);
  CHECK(v.witness->condition == 1);
  CHECK(pair(*a, *v.witness) == std::set<std::string>{"b", "f(b)"});
  CHECK(v.witness->pivot_class == a->congruence().class_of(flat(*a, "a")));
}

TEST_CASE("UNC of V succeeds after a single run") {
  auto a = analyse(gtrs::testing::system_v);
  Verdict v = a->decide(Property::unc);
  CHECK(v.holds);
  CHECK(v.stats.pushed == 1);
}

TEST_CASE("first UNR condition records the unique normal forms") {
  auto u = analyse(gtrs::testing::system_u);
  UnrFirst first = unr_first(u->flat(), u->forward(), u->automaton(), u->curried());
  CHECK_FALSE(first.violation);
  auto w = [&](const char* p) { return first.w[flat(*u, p)]; };
  REQUIRE(w("f"));
  CHECK(u->display(*w("f")) == "f");
  REQUIRE(w("b"));
  CHECK(u->display(*w("b")) == "b");
  REQUIRE(w("f∘a"));
  CHECK(u->display(*w("f∘a")) == "b");
  CHECK(first.n[flat(*u, "f∘a")] == flat(*u, "b"));
  CHECK_FALSE(w("a"));

  auto v = analyse(gtrs::testing::system_v);
  UnrFirst fv = unr_first(v->flat(), v->forward(), v->automaton(), v->curried());
  std::size_t recorded = 0;
  for (const auto& x : fv.w) recorded += x.has_value();
  CHECK(recorded == 1);
  CHECK(fv.w[flat(*v, "f")].has_value());
}

TEST_CASE("UNR of U fails on the second condition") {
  auto a = analyse(gtrs::testing::system_u);
  Verdict v = a->decide(Property::unr);
  REQUIRE(v.witness);
  CHECK(v.witness->condition == 2);
  CHECK(pair(*a, *v.witness) == std::set<std::string>{"b", "f(b)"});
}

TEST_CASE("UNR of a simple peak fails on the first condition") {
  auto a = analyse(gtrs::testing::system_peak);
  Verdict v = a->decide(Property::unr);
  REQUIRE(v.witness);
  CHECK(v.witness->condition == 1);
  CHECK(pair(*a, *v.witness) == std::set<std::string>{"b", "c"});
}

TEST_CASE("NFP of U fails on the first condition") {
  auto a = analyse(gtrs::testing::system_u);
  Verdict v = a->decide(Property::nfp);
  REQUIRE(v.witness);
  CHECK(v.witness->condition == 1);
  // a is convertible to the normal form b but never reaches it
  CHECK(a->display(v.witness->s) == "a");
  CHECK(a->display(v.witness->t) == "b");
}

TEST_CASE("CR of U fails on the third condition") {
  auto a = analyse(gtrs::testing::system_u);
  Verdict v = a->decide(Property::cr);
  REQUIRE(v.witness);
  CHECK(v.witness->condition == 3);
  CHECK(pair(*a, *v.witness) == std::set<std::string>{"a", "b"});
}

TEST_CASE("CR of W fails on two convertible loops") {
  auto a = analyse(gtrs::testing::system_w);
  Verdict v = a->decide(Property::cr);
  REQUIRE(v.witness);
  CHECK(v.witness->condition == 3);
  CHECK(pair(*a, *v.witness) == std::set<std::string>{"a", "c"});
}

TEST_CASE("every negative witness survives re-checking") {
  for (auto text : {gtrs::testing::system_u, gtrs::testing::system_w, gtrs::testing::system_peak}) {
    auto a = analyse(text);
    for (const Verdict& v : a->decide_all()) {
      if (v.holds) continue;
      auto check = oracle::verify_witness(a->curried(), v);
      CHECK_MESSAGE(check.ok, name(v.property), ": ", check.reason);
    }
  }
}

TEST_CASE("the implication chain is enforced") {
  auto a = analyse(gtrs::testing::system_u);
  auto v = a->decide_all();
  CHECK_NOTHROW(check_implication_chain(v));
  v[0].holds = true;  // CR without NFP
  CHECK_THROWS_AS(check_implication_chain(v), InternalError);
}

TEST_CASE("property names") {
  CHECK(name(Property::unr) == "UNR");
  CHECK(parse_property("nFp") == Property::nfp);
  CHECK_FALSE(parse_property("wcr").has_value());
}
