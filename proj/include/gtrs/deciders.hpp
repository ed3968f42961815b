#pragma once

// Decision procedures for UNC, UNR, NFP and CR over the preprocessed system.
//
// Every negative verdict carries two curried terms s and t:
//   UNC  s, t distinct convertible normal forms
//   UNR  s, t distinct normal forms with a common ancestor
//   NFP  t a normal form, s convertible to t, s does not reduce to t
//   CR   s, t convertible without a common reduct

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gtrs/congruence.hpp"
#include "gtrs/nf_automaton.hpp"
#include "gtrs/relation.hpp"
#include "gtrs/stability.hpp"

namespace gtrs {

enum class Property { cr, nfp, unc, unr };

inline constexpr std::array<Property, 4> all_properties{Property::cr, Property::nfp, Property::unc,
                                                         Property::unr};

std::string_view name(Property p);        // "CR", ...
std::optional<Property> parse_property(std::string_view s);  // case-insensitive

struct Witness {
  /// Violated condition. UNC: 1. UNR: 1 or 2. NFP: 0 when UNC already
  /// fails, else 1-4. CR: 1-3.
  int condition = 0;
  TermId s{};
  TermId t{};
  ClassId pivot_class = 0;
  std::optional<FlatId> pivot_flat;
};

struct DecisionStats {
  std::size_t pushed = 0;            // worklist items
  std::size_t max_cell_updates = 0;  // second UNR condition only
};

struct Verdict {
  Property property{};
  bool holds = true;
  std::optional<Witness> witness;
  DecisionStats stats;
};

/// Internal consistency failure, e.g. verdicts breaking CR ⇒ NFP ⇒ UNC ⇒ UNR.
class InternalError : public Error {
public:
  using Error::Error;
};

Verdict decide_unc(const FlatSystem& fs, const CongruenceClosure& cc, const NfAutomaton& nfa,
                   CurriedTrs& ctrs);

/// Normal forms reaching each flat constant under E ∪ F⁻, when unique.
struct UnrFirst {
  std::optional<Witness> violation;
  std::vector<std::optional<TermId>> w;
  std::vector<StateId> n;
  DecisionStats stats;
};

UnrFirst unr_first(const FlatSystem& fs, const BitMatrix& fwd, const NfAutomaton& nfa,
                   CurriedTrs& ctrs);

Verdict unr_second(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                   const BitMatrix& meet, const UnrFirst& first, const NfAutomaton& nfa,
                   CurriedTrs& ctrs);

Verdict decide_unr(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                   const BitMatrix& meet, const NfAutomaton& nfa, CurriedTrs& ctrs);

Verdict decide_nfp(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                   const NfAutomaton& nfa, const StabilityTables& st, CurriedTrs& ctrs);

Verdict decide_cr(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                  const BitMatrix& join, const StabilityTables& st);

/// Throws InternalError unless CR ⇒ NFP ⇒ UNC ⇒ UNR holds on the booleans.
/// Verdicts are looked up by property, order does not matter.
void check_implication_chain(const std::array<Verdict, 4>& verdicts);

} // namespace gtrs
