#include <algorithm>

#include "doctest.h"

#include "gtrs/term.hpp"

using namespace gtrs;

namespace {

// t_0 = a, t_{i+1} = h(t_i, t_i)
TermId doubling(TermStore& s, unsigned k) {
  TermId t = s.constant("a");
  SymbolId h = s.symbol("h", 2);
  for (unsigned i = 0; i < k; ++i) t = s.make(h, {t, t});
  return t;
}

} // namespace

TEST_CASE("interning returns one id per distinct term") {
  TermStore s;
  SymbolId f = s.symbol("f", 1);
  TermId a = s.constant("a");
  CHECK(s.make(f, {a}) == s.make(f, {a}));
  CHECK(s.constant("a") != s.constant("b"));
  CHECK(s.term_count() == 3);
  CHECK(s.find(f, std::vector<TermId>{s.constant("b")}) == nullptr);
}

TEST_CASE("a symbol keeps its first arity") {
  TermStore s;
  s.symbol("f", 1);
  CHECK_THROWS_AS(s.symbol("f", 2), StructuralError);
  CHECK(s.find_symbol("f") != nullptr);
  CHECK(s.find_symbol("g") == nullptr);
}

TEST_CASE("subterms come out in post-order without repeats") {
  TermStore s;
  TermId a = s.constant("a");
  TermId fa = s.make(s.symbol("f", 1), {a});
  CHECK(subterm_set(s, fa) == std::vector<TermId>{a, fa});
  CHECK(subterm_set(s, a) == std::vector<TermId>{a});

  TermId t3 = doubling(s, 3);
  auto subs = subterm_set(s, t3);
  REQUIRE(subs.size() == 4);
  CHECK(subs.front() == a);
  CHECK(subs.back() == t3);
}

TEST_CASE("sizes are computed on the shared DAG") {
  TermStore s;
  TermId fa = s.make(s.symbol("f", 1), {s.constant("a")});
  CHECK(term_size(s, fa) == 2);

  std::size_t before = s.term_count();
  TermId t10 = doubling(s, 10);
  CHECK(term_size(s, t10) == 2047);
  // a is already interned; each level adds one node
  CHECK(s.term_count() - before == 10);
  CHECK(subterm_set(s, t10).size() == 11);

  TermId huge = doubling(s, 80);
  CHECK(term_size(s, huge) == UINT64_MAX);
}

TEST_CASE("rule subterms are listed rule by rule, left side first") {
  Trs trs;
  TermStore& s = trs.store;
  TermId a = s.constant("a"), b = s.constant("b");
  TermId fa = s.make(s.symbol("f", 1), {a});
  trs.rules = {{fa, a}, {fa, b}};
  CHECK(subterm_set(trs) == std::vector<TermId>{a, fa, b});
  CHECK(total_size(trs) == 6);
}

TEST_CASE("printing") {
  TermStore s;
  TermId t = s.make(s.symbol("g", 2), {s.constant("a"), s.make(s.symbol("h", 1), {s.constant("b")})});
  CHECK(to_string(s, t) == "g(a,h(b))");
}
