#pragma once

// E/F-normal pairs and top-stabilizable sides and constants.

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gtrs/congruence.hpp"
#include "gtrs/relation.hpp"

namespace gtrs {

/// (p, q) set iff p ∘ q is in E/F-normal form: no p -> p', q -> q' in the
/// rewrite closure with p' ∘ q' an E left-hand side.
BitMatrix nf_pairs(const FlatSystem& fs, const BitMatrix& fwd);

class StabilityTables {
public:
  const BitMatrix& nf_pairs() const { return nf_; }
  /// t indexes CongruenceClosure::transitions()
  bool side(std::uint32_t t) const { return ts_.test(t); }
  bool constant(ClassId c) const { return ts_.test(transition_count_ + c); }
  std::vector<std::uint32_t> sides() const;
  std::vector<ClassId> constants() const;

  /// A term whose E/F-normal forms are never flat and whose class image
  /// reaches side t (resp. class c) under C. Only valid for stabilizable ones.
  TermId side_witness(std::uint32_t t) const { return side_term_[t]; }
  TermId constant_witness(ClassId c) const { return const_term_[c]; }

private:
  friend StabilityTables top_stabilizable(const FlatSystem&, const CongruenceClosure&, BitMatrix,
                                          CurriedTrs&);
  BitMatrix nf_;
  std::size_t transition_count_ = 0;
  boost::dynamic_bitset<> ts_;
  std::vector<TermId> side_term_;
  std::vector<TermId> const_term_;
};

/// Least solution of the nf / ts0 / ts_i rules over the transitions of C.
/// Witness terms are interned into the curried store.
StabilityTables top_stabilizable(const FlatSystem& fs, const CongruenceClosure& cc, BitMatrix nf,
                                 CurriedTrs& ctrs);

} // namespace gtrs
