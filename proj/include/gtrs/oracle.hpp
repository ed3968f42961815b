#pragma once

// Brute-force cross-checks for small systems. Searches are refutation-only:
// a hit is conclusive, running out of budget is not.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtrs/deciders.hpp"
#include "gtrs/preprocess.hpp"
#include "gtrs/term.hpp"

namespace gtrs::oracle {

struct SearchBudget {
  std::uint64_t max_term_size = 0;    // terms above this are pruned
  std::size_t max_frontier = 10000;   // terms kept per reduct set
  std::size_t max_steps = 100000;     // term expansions per reduct set and per refutation
  std::size_t max_start_terms = 200;  // refute_property start terms
};

/// Term size bound of 3× the largest rule side, other limits at defaults.
SearchBudget default_budget(const Trs& trs);

/// Pairwise-merge congruence fixpoint. Label of each flat constant is the
/// smallest member of its class.
std::vector<FlatId> naive_congruence(const FlatSystem& fs);

enum class Search { found, absent, unknown };

/// One-step rewriting with memoized successors. Works on any Trs, curried
/// or not. The store grows as reducts are interned.
class Rewriter {
public:
  explicit Rewriter(Trs& trs);

  const std::vector<TermId>& successors(TermId t);
  /// Direct matching: no subterm is a left-hand side.
  bool is_normal_form(TermId t);
  std::uint64_t size(TermId t);

  struct Reducts {
    std::vector<TermId> terms;  // BFS order, starting with t
    bool complete = true;       // false if anything was pruned
  };
  /// All reducts of t within the budget. Cached per term.
  const Reducts& reducts(TermId t, const SearchBudget& budget);

  /// s →* t, stopping at the first hit. `absent` only if every reduct of s
  /// was seen.
  Search reach(TermId s, TermId t, const SearchBudget& budget);

  Trs& trs() { return trs_; }
  /// Expansions over the lifetime of this rewriter.
  std::size_t steps() const { return steps_; }

private:
  // BFS from t; visit(u) returns true to stop. Returns true iff exhaustive.
  template <class Visit> bool explore(TermId t, const SearchBudget& budget, Visit&& visit);

  Trs& trs_;
  std::unordered_multimap<TermId, TermId> by_lhs_;
  std::unordered_map<TermId, std::vector<TermId>> succ_;
  std::unordered_map<TermId, Reducts> reducts_;
  std::unordered_map<TermId, bool> normal_;
  std::unordered_map<TermId, std::uint64_t> size_;
  std::size_t steps_ = 0;
};

inline Search bounded_reach(Trs& trs, TermId s, TermId t, const SearchBudget& budget) {
  return Rewriter(trs).reach(s, t, budget);
}

struct Counterexample {
  TermId s{};
  TermId t{};
  std::optional<TermId> source;  // peak or conversion origin, when known
  std::string reason;
};

/// Looks for a violation of `p` among terms up to the budget's size.
std::optional<Counterexample> refute_property(Trs& trs, Property p, const SearchBudget& budget);

/// All four at once from one exploration, indexed by Property.
using Refutations = std::array<std::optional<Counterexample>, 4>;
Refutations refute_all(Trs& trs, const SearchBudget& budget);

struct WitnessCheck {
  bool ok = false;
  std::string reason;
};

/// Re-checks a negative verdict whose witness lives in `ctrs`' store.
/// Normal forms by direct matching, convertibility by naive congruence on
/// the rule subterms extended with s and t, non-reachability and
/// non-joinability on freshly computed relations of that extension, and
/// bounded search as a second opinion for the positive claims.
WitnessCheck verify_witness(CurriedTrs& ctrs, const Verdict& v);

struct TrsGenSpec {
  std::uint64_t seed = 0;
  unsigned constants = 2;
  unsigned unary = 1;
  unsigned binary = 1;
  unsigned rules = 3;
  unsigned max_depth = 3;
};

/// Deterministic for fixed parameters. Constants are named a, b, ..., unary
/// symbols f, g, ..., binary symbols h, k, ....
Trs gen_random_trs(const TrsGenSpec& spec);

} // namespace gtrs::oracle
