#pragma once

// Deterministic bottom-up automaton accepting exactly the normal forms of the
// curried rules. States are the flat constants naming normal-form subterms
// plus one extra state for normal forms that are not subterms of the rules.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gtrs/preprocess.hpp"

namespace gtrs {

using StateId = std::uint32_t;

struct NfTransition {
  enum class Kind : std::uint8_t { constant, app };
  Kind kind;
  SymbolId symbol{};  // constant transitions
  StateId left = 0;   // app transitions
  StateId right = 0;
  StateId result = 0;
};

class NfAutomaton {
public:
  explicit NfAutomaton(const FlatSystem& fs);

  /// The state for normal forms outside the rule subterms.
  StateId star() const { return static_cast<StateId>(reducible_.size()); }
  bool reducible(FlatId p) const { return reducible_.test(p); }
  bool is_state(StateId q) const { return q == star() || !reducible_.test(q); }
  /// Normal-form flat constants in increasing order, then star.
  std::vector<StateId> states() const;

  std::optional<StateId> delta(SymbolId c) const;
  std::optional<StateId> delta(StateId left, StateId right) const;

  /// State reached by t, or nullopt if t is reducible.
  std::optional<StateId> run(const CurriedTrs& ctrs, TermId t) const;
  bool is_normal_form(const CurriedTrs& ctrs, TermId t) const { return run(ctrs, t).has_value(); }

  /// All transitions between states, constants first.
  std::vector<NfTransition> transitions() const;

private:
  const FlatSystem* fs_;
  boost::dynamic_bitset<> reducible_;
};

} // namespace gtrs
