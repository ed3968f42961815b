#pragma once

// Hash-consed ground terms.
//
// Every distinct term f(t1,...,tn) is stored exactly once in a TermStore and
// addressed by a dense TermId, so structural equality is an id comparison.
// Ids are assigned in creation order and are only meaningful within the store
// that produced them.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gtrs {

enum class TermId : std::uint32_t {};
enum class SymbolId : std::uint32_t {};

constexpr std::uint32_t index(TermId t) { return static_cast<std::uint32_t>(t); }
constexpr std::uint32_t index(SymbolId f) { return static_cast<std::uint32_t>(f); }

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input structure, e.g. a symbol used with two different arities.
class StructuralError : public Error {
public:
  using Error::Error;
};

struct Symbol {
  std::string name;
  unsigned arity = 0;
};

class TermStore {
public:
  /// Declares or looks up the symbol `name`. A name keeps the arity of its
  /// first declaration; a conflicting arity throws StructuralError.
  SymbolId symbol(std::string_view name, unsigned arity);
  /// Looks up a symbol without declaring it.
  const SymbolId* find_symbol(std::string_view name) const;

  /// Returns the unique id of head(children...), creating it if needed.
  TermId make(SymbolId head, std::span<const TermId> children);
  TermId make(SymbolId head, std::initializer_list<TermId> children) {
    return make(head, std::span<const TermId>(children.begin(), children.size()));
  }
  TermId constant(std::string_view name) { return make(symbol(name, 0), {}); }
  /// Returns the id of head(children...) if it has been interned before.
  const TermId* find(SymbolId head, std::span<const TermId> children) const;

  SymbolId head(TermId t) const { return nodes_[index(t)].head; }
  std::span<const TermId> args(TermId t) const {
    const Node& n = nodes_[index(t)];
    return {children_.data() + n.first_child, n.arity};
  }
  const Symbol& info(SymbolId f) const { return symbols_[index(f)]; }
  const std::string& name(SymbolId f) const { return symbols_[index(f)].name; }

  std::size_t term_count() const { return nodes_.size(); }
  std::size_t symbol_count() const { return symbols_.size(); }
  bool valid(TermId t) const { return index(t) < nodes_.size(); }

private:
  struct Node {
    SymbolId head;
    std::uint32_t first_child;
    std::uint32_t arity;
  };
  static std::size_t key_hash(SymbolId head, std::span<const TermId> children);

  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> symbol_index_;
  std::vector<Node> nodes_;
  std::vector<TermId> children_;
  // bucketed by key_hash; collisions resolved against nodes_
  std::unordered_multimap<std::size_t, TermId> intern_;
};

struct Rule {
  TermId lhs;
  TermId rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// A finite ground TRS together with the store its terms live in.
struct Trs {
  TermStore store;
  std::vector<Rule> rules;
};

/// All distinct subterms of t, including t, in post-order (children first).
std::vector<TermId> subterm_set(const TermStore& store, TermId t);

/// Distinct subterms of all rule sides, post-order, rule by rule, lhs first.
std::vector<TermId> subterm_set(const Trs& trs);

/// Number of symbol occurrences. Computed on the DAG, so exponentially large
/// terms are fine; the result saturates at UINT64_MAX.
std::uint64_t term_size(const TermStore& store, TermId t);

/// Sum of |l| + |r| over all rules.
std::uint64_t total_size(const Trs& trs);

/// Prints f(t1,...,tn) with constants bare.
std::string to_string(const TermStore& store, TermId t);

} // namespace gtrs

template <> struct std::hash<gtrs::TermId> {
  std::size_t operator()(gtrs::TermId t) const noexcept {
    return std::hash<std::uint32_t>{}(gtrs::index(t));
  }
};

template <> struct std::hash<gtrs::SymbolId> {
  std::size_t operator()(gtrs::SymbolId f) const noexcept {
    return std::hash<std::uint32_t>{}(gtrs::index(f));
  }
};
