#pragma once

// Congruence closure of the curried rules over their subterms.
//
// Classes get dense ids ordered by their smallest flat constant, which also
// serves as the representative. The transitions C form a deterministic
// bottom-up automaton over class ids.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtrs/preprocess.hpp"

namespace gtrs {

using ClassId = std::uint32_t;

/// p1 ∘ p2 -> result over class ids
struct ClassTransition {
  ClassId left;
  ClassId right;
  ClassId result;
  friend bool operator==(const ClassTransition&, const ClassTransition&) = default;
};

/// c -> result
struct ClassConstTransition {
  SymbolId symbol;
  ClassId result;
};

class CongruenceClosure {
public:
  std::size_t class_count() const { return members_.size(); }
  ClassId class_of(FlatId p) const { return class_of_[p]; }
  std::span<const ClassId> class_map() const { return class_of_; }
  std::span<const FlatId> members(ClassId c) const { return members_[c]; }
  FlatId representative(ClassId c) const { return members_[c].front(); }

  std::span<const ClassTransition> transitions() const { return transitions_; }
  std::span<const ClassConstTransition> const_transitions() const { return const_transitions_; }
  std::optional<std::uint32_t> transition(ClassId left, ClassId right) const;
  std::optional<ClassId> const_transition(SymbolId c) const;
  /// Indices of transitions with c in either argument position, each once.
  std::span<const std::uint32_t> transitions_with(ClassId c) const { return with_arg_[c]; }
  /// Indices into FlatSystem::app_rules() of the E rules mapped onto transition t.
  std::span<const std::uint32_t> sources(std::uint32_t t) const { return sources_[t]; }

private:
  friend CongruenceClosure congruence_closure(const FlatSystem&);
  static std::uint64_t key(ClassId l, ClassId r) { return (std::uint64_t{l} << 32) | r; }

  std::vector<ClassId> class_of_;
  std::vector<std::vector<FlatId>> members_;
  std::vector<ClassTransition> transitions_;
  std::vector<ClassConstTransition> const_transitions_;
  std::unordered_map<std::uint64_t, std::uint32_t> transition_index_;
  std::unordered_map<SymbolId, ClassId> const_index_;
  std::vector<std::vector<std::uint32_t>> with_arg_;
  std::vector<std::vector<std::uint32_t>> sources_;
};

CongruenceClosure congruence_closure(const FlatSystem& fs);

/// A term over curried symbols, flat constants and class ids.
struct MixedTerm {
  enum class Kind : std::uint8_t { symbol, flat, klass, app };
  Kind kind = Kind::symbol;
  std::uint32_t id = 0;  // symbol index, flat id or class id; unused for app
  std::vector<MixedTerm> args;

  static MixedTerm symbol(SymbolId f) { return {Kind::symbol, index(f), {}}; }
  static MixedTerm flat(FlatId p) { return {Kind::flat, p, {}}; }
  static MixedTerm klass(ClassId c) { return {Kind::klass, c, {}}; }
  static MixedTerm app(MixedTerm l, MixedTerm r) {
    return {Kind::app, 0, {std::move(l), std::move(r)}};
  }
  friend bool operator==(const MixedTerm&, const MixedTerm&) = default;
};

/// Replaces every flat constant by its class.
MixedTerm apply_class_map(const CongruenceClosure& cc, const MixedTerm& t);

/// True iff s and t are convertible under the curried rules. Both must live
/// in the curried store. Subterms without a C transition stay concrete and
/// only match structurally equal residues.
bool convertible(const CongruenceClosure& cc, const CurriedTrs& ctrs, TermId s, TermId t);

} // namespace gtrs
