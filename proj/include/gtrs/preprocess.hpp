#pragma once

// Currying and flattening.
//
// Currying turns every symbol into a constant and encodes application with a
// single binary symbol, so f(t1,...,tn) becomes (...(f ∘ t1) ∘ ...) ∘ tn.
// Flattening then names each distinct subterm s of the curried rules with a
// flat constant [s], numbered densely from 0 in post-order, rule by rule.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtrs/term.hpp"

namespace gtrs {

inline constexpr std::string_view app_symbol_name = "∘";

struct CurriedTrs {
  Trs trs;
  SymbolId app{};
  // arity each curried constant had in the source signature
  std::unordered_map<SymbolId, unsigned> source_arity;

  unsigned arity_of(SymbolId c) const {
    auto it = source_arity.find(c);
    return it == source_arity.end() ? 0 : it->second;
  }
};

/// Curries every rule. Throws StructuralError if the input already uses the
/// application symbol's name.
CurriedTrs curry(const Trs& trs);

/// Curries a term of `source` into the store of `ctrs`, declaring constants
/// that the curried signature has not seen yet.
TermId curry_term(const TermStore& source, TermId t, CurriedTrs& ctrs);

/// Inverse of currying. Returns nullopt when t is not the image of a
/// well-formed term, e.g. a partially applied symbol.
std::optional<TermId> uncurry(const CurriedTrs& ctrs, TermId t, TermStore& out);

/// Uncurried rendering when possible, otherwise explicit ∘ (left-associative).
std::string display(const CurriedTrs& ctrs, TermId t);

/// Curried rendering with explicit ∘.
std::string display_curried(const CurriedTrs& ctrs, TermId t);

using FlatId = std::uint32_t;

/// [l] ∘ [r] -> [l ∘ r]
struct AppRule {
  FlatId left;
  FlatId right;
  FlatId result;
};

/// c -> [c]
struct ConstRule {
  SymbolId symbol;
  FlatId result;
};

/// [lhs] -> [rhs]
struct FlatRule {
  FlatId lhs;
  FlatId rhs;
};

class FlatSystem;

/// Flattens the curried rules. `extra` terms (over the same store) join the
/// named universe after the rule subterms; they add E rules but no R♭ rules.
FlatSystem flatten(const CurriedTrs& ctrs, std::span<const TermId> extra = {});

class FlatSystem {
public:
  std::size_t size() const { return subterm_.size(); }
  TermId subterm(FlatId p) const { return subterm_[p]; }

  std::span<const AppRule> app_rules() const { return app_rules_; }
  std::span<const ConstRule> const_rules() const { return const_rules_; }
  std::span<const FlatRule> rules() const { return rules_; }

  std::optional<FlatId> app(FlatId left, FlatId right) const;
  std::optional<FlatId> constant(SymbolId c) const;
  std::optional<FlatId> find(TermId t) const;

  /// Indices into app_rules() of rules with p as left / right argument.
  std::span<const std::uint32_t> with_left(FlatId p) const { return with_left_[p]; }
  std::span<const std::uint32_t> with_right(FlatId p) const { return with_right_[p]; }
  /// Rules with p in either argument position, each listed once.
  std::span<const std::uint32_t> with_arg(FlatId p) const { return with_arg_[p]; }

  /// The E rule whose right-hand side is p: an index into const_rules() when
  /// is_constant(p), into app_rules() otherwise.
  bool is_constant(FlatId p) const { return defining_const_[p]; }
  std::uint32_t definition(FlatId p) const { return definition_[p]; }

private:
  friend FlatSystem flatten(const CurriedTrs&, std::span<const TermId>);
  static std::uint64_t key(FlatId l, FlatId r) { return (std::uint64_t{l} << 32) | r; }

  std::vector<TermId> subterm_;
  std::vector<AppRule> app_rules_;
  std::vector<ConstRule> const_rules_;
  std::vector<FlatRule> rules_;
  std::unordered_map<std::uint64_t, FlatId> app_index_;
  std::unordered_map<SymbolId, FlatId> const_index_;
  std::unordered_map<TermId, FlatId> term_index_;
  std::vector<std::vector<std::uint32_t>> with_left_, with_right_, with_arg_;
  std::vector<bool> defining_const_;
  std::vector<std::uint32_t> definition_;
};

} // namespace gtrs
