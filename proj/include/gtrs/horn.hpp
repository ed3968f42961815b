#pragma once

// Forward chaining for ground Horn clauses over a fixed atom universe.
//
// Clauses are never materialized. The caller supplies a schema: a callback
// that, given a freshly derived atom, finds every clause instance in which
// that atom is a premise and whose other premises already hold, and derives
// the conclusions. Each atom is processed exactly once.

#include <cstddef>
#include <deque>
#include <functional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gtrs {

enum class Discipline { lifo, fifo };

class HornSolver {
public:
  explicit HornSolver(std::size_t universe, Discipline discipline = Discipline::lifo)
      : facts_(universe), discipline_(discipline) {}

  /// Records `atom` as derived. Returns false if it was already known.
  bool derive(std::size_t atom) {
    if (facts_.test(atom)) return false;
    facts_.set(atom);
    pending_.push_back(atom);
    return true;
  }

  bool holds(std::size_t atom) const { return facts_.test(atom); }

  /// Runs `fire(atom)` for every derived atom, including those derived by
  /// earlier calls of fire, until nothing new appears.
  template <class Fire> void saturate(Fire&& fire) {
    while (!pending_.empty()) {
      std::size_t atom;
      if (discipline_ == Discipline::lifo) {
        atom = pending_.back();
        pending_.pop_back();
      } else {
        atom = pending_.front();
        pending_.pop_front();
      }
      ++processed_;
      fire(atom);
    }
  }

  const boost::dynamic_bitset<>& facts() const { return facts_; }
  std::size_t universe() const { return facts_.size(); }
  std::size_t processed() const { return processed_; }

private:
  boost::dynamic_bitset<> facts_;
  std::deque<std::size_t> pending_;
  Discipline discipline_;
  std::size_t processed_ = 0;
};

/// Least set of atoms containing `seeds` and closed under `schema`.
/// `schema(atom, solver)` must call solver.derive for each conclusion.
boost::dynamic_bitset<> solve(std::size_t universe, std::span<const std::size_t> seeds,
                              const std::function<void(std::size_t, HornSolver&)>& schema,
                              Discipline discipline = Discipline::lifo);

} // namespace gtrs
