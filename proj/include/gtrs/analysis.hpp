#pragma once

// One analysis run over a ground TRS. Artifacts are built on first use, so
// asking only for UNC never pays for the cubic relations.

#include <array>
#include <chrono>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gtrs/congruence.hpp"
#include "gtrs/deciders.hpp"
#include "gtrs/nf_automaton.hpp"
#include "gtrs/preprocess.hpp"
#include "gtrs/relation.hpp"
#include "gtrs/stability.hpp"

namespace gtrs {

struct PhaseTiming {
  std::string phase;
  double ms = 0;
};

struct InputStats {
  std::uint64_t total_size = 0;  // sum of |l| + |r|
  std::size_t rule_count = 0;
  std::size_t subterm_count = 0;  // flat constants
};

class Analysis {
public:
  /// Takes ownership of `trs`. Non-movable: the automaton points into the
  /// flat system.
  static std::unique_ptr<Analysis> create(Trs trs);

  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const Trs& source() const { return source_; }
  CurriedTrs& curried() { return curried_; }
  const FlatSystem& flat() const { return *flat_; }
  const CongruenceClosure& congruence();
  const NfAutomaton& automaton();
  const BitMatrix& forward();
  const BitMatrix& meet();
  const BitMatrix& join();
  const StabilityTables& stability();

  Verdict decide(Property p);
  /// All four, in all_properties order. Throws InternalError if the
  /// verdicts break the implication chain.
  std::array<Verdict, 4> decide_all();

  InputStats stats() const;
  /// In the order phases ran.
  std::span<const PhaseTiming> timings() const { return timings_; }

  /// Renders a witness term of this run, uncurried where possible.
  std::string display(TermId curried) const { return gtrs::display(curried_, curried); }

private:
  explicit Analysis(Trs trs);

  template <class F> auto timed(const char* phase, F&& f) {
    auto start = std::chrono::steady_clock::now();
    auto result = f();
    std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    timings_.push_back({phase, d.count()});
    return result;
  }

  Trs source_;
  CurriedTrs curried_;
  std::optional<FlatSystem> flat_;
  std::optional<CongruenceClosure> cc_;
  std::optional<NfAutomaton> nfa_;
  std::optional<BitMatrix> fwd_, meet_, join_;
  std::optional<StabilityTables> st_;
  std::vector<PhaseTiming> timings_;
};

} // namespace gtrs
