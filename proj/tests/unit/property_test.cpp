// Invariants checked over seeded random systems and random terms.

#include <random>

#include "doctest.h"

#include "gtrs/oracle.hpp"
#include "support/systems.hpp"

using namespace gtrs;

namespace {

constexpr std::uint64_t seeds = 150;

std::unique_ptr<Analysis> random_analysis(std::uint64_t seed) {
  oracle::TrsGenSpec spec;
  spec.seed = seed;
  spec.rules = 1 + seed % 5;
  return Analysis::create(oracle::gen_random_trs(spec));
}

// Random curried term over the constants of the curried signature.
TermId random_term(CurriedTrs& c, std::mt19937_64& rng, unsigned depth) {
  std::vector<SymbolId> constants;
  for (std::uint32_t i = 0; i < c.trs.store.symbol_count(); ++i) {
    if (SymbolId f{i}; f != c.app) constants.push_back(f);
  }
  std::function<TermId(unsigned)> go = [&](unsigned d) {
    if (d == 0 || rng() % 3 == 0) return c.trs.store.make(constants[rng() % constants.size()], {});
    TermId l = go(d - 1);
    return c.trs.store.make(c.app, {l, go(d - 1)});
  };
  return go(depth);
}

} // namespace

TEST_CASE("the automaton accepts exactly the normal forms") {
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto a = random_analysis(seed);
    const NfAutomaton& nfa = a->automaton();
    oracle::Rewriter rw(a->curried().trs);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20; ++i) {
      TermId t = random_term(a->curried(), rng, 4);
      CHECK(nfa.is_normal_form(a->curried(), t) == rw.is_normal_form(t));
    }
  }
}

TEST_CASE("convertibility agrees with naive congruence over the extended universe") {
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto a = random_analysis(seed);
    std::mt19937_64 rng(seed * 7 + 1);
    for (int i = 0; i < 10; ++i) {
      TermId s = random_term(a->curried(), rng, 3), t = random_term(a->curried(), rng, 3);
      std::vector<TermId> extra{s, t};
      FlatSystem fs = flatten(a->curried(), extra);
      auto labels = oracle::naive_congruence(fs);
      bool naive = labels[*fs.find(s)] == labels[*fs.find(t)];
      CHECK(convertible(a->congruence(), a->curried(), s, t) == naive);
    }
  }
}

TEST_CASE("relations are closed and nested as the definitions require") {
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto a = random_analysis(seed);
    const std::size_t n = a->flat().size();
    const BitMatrix &fwd = a->forward(), &meet = a->meet(), &join = a->join();
    const CongruenceClosure& cc = a->congruence();
    CHECK(meet.symmetric());
    CHECK(join.symmetric());
    CHECK(rewrite_closure(a->flat(), Discipline::fifo) == fwd);
    for (std::size_t p = 0; p < n; ++p) {
      CHECK(fwd(p, p));
      for (std::size_t q = 0; q < n; ++q) {
        bool same = cc.class_of(FlatId(p)) == cc.class_of(FlatId(q));
        if (meet(p, q) || join(p, q)) CHECK(same);
        // a step is both a peak and a valley
        if (fwd(p, q)) CHECK((meet(p, q) && join(p, q)));
        for (std::size_t r = 0; r < n; ++r) {
          if (fwd(p, q) && fwd(q, r)) CHECK(fwd(p, r));
        }
      }
    }
  }
}

TEST_CASE("reducible pairs match the definition") {
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto a = random_analysis(seed);
    const FlatSystem& fs = a->flat();
    const BitMatrix& fwd = a->forward();
    const BitMatrix& nf = a->stability().nf_pairs();
    for (FlatId p = 0; p < fs.size(); ++p) {
      for (FlatId q = 0; q < fs.size(); ++q) {
        bool reducible = false;
        for (const AppRule& e : fs.app_rules()) reducible |= fwd(p, e.left) && fwd(q, e.right);
        CHECK(nf(p, q) == !reducible);
      }
    }
  }
}

TEST_CASE("verdicts do not depend on the order of decisions") {
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto all = random_analysis(seed)->decide_all();
    for (Property p : {Property::unr, Property::cr, Property::unc, Property::nfp}) {
      auto alone = random_analysis(seed)->decide(p);
      CHECK(alone.holds == all[static_cast<std::size_t>(p)].holds);
    }
  }
}

TEST_CASE("negative verdicts carry verifiable witnesses") {
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto a = random_analysis(seed);
    for (const Verdict& v : a->decide_all()) {
      if (v.holds) continue;
      REQUIRE(v.witness);
      auto check = oracle::verify_witness(a->curried(), v);
      CHECK_MESSAGE(check.ok, "seed ", seed, " ", name(v.property), ": ", check.reason);
    }
  }
}

TEST_CASE("witness terms of stabilizable sides land in the side's class") {
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    auto a = random_analysis(seed);
    const StabilityTables& st = a->stability();
    for (std::uint32_t t : st.sides()) {
      TermId w = st.side_witness(t);
      // its class image must reach the side's result
      TermId rep = a->flat().subterm(a->congruence().representative(a->congruence().transitions()[t].result));
      CHECK(convertible(a->congruence(), a->curried(), w, rep));
    }
  }
}
