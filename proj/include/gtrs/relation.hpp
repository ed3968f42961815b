#pragma once

// Binary relations over flat constants: the rewrite closure and the meetable
// and joinable constant relations.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gtrs/horn.hpp"
#include "gtrs/preprocess.hpp"

namespace gtrs {

class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : rows_(n, boost::dynamic_bitset<>(n)) {}

  std::size_t size() const { return rows_.size(); }
  bool operator()(std::size_t p, std::size_t q) const { return rows_[p].test(q); }
  void set(std::size_t p, std::size_t q) { rows_[p].set(q); }
  const boost::dynamic_bitset<>& row(std::size_t p) const { return rows_[p]; }

  BitMatrix transpose() const;
  std::size_t count() const;
  bool symmetric() const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  std::vector<boost::dynamic_bitset<>> rows_;
};

/// Calls f(q) for every set bit q of `row`, in increasing order.
template <class F> void for_each_bit(const boost::dynamic_bitset<>& row, F&& f) {
  for (auto q = row.find_first(); q != boost::dynamic_bitset<>::npos; q = row.find_next(q)) {
    f(q);
  }
}

/// p -> q iff p reaches q under R♭ ∪ E ∪ E⁻.
BitMatrix rewrite_closure(const FlatSystem& fs, Discipline discipline = Discipline::lifo);

/// Least reflexive relation closed under congruence through E and under
/// steps of `steps` on either side: p ~ q and q -> r give p ~ r, and
/// q -> p with q ~ r give p ~ r.
BitMatrix peak_closure(const FlatSystem& fs, const BitMatrix& steps,
                       Discipline discipline = Discipline::lifo);

/// p ↑ q: a common ancestor under E ∪ F.
inline BitMatrix meetable(const FlatSystem& fs, const BitMatrix& fwd) {
  return peak_closure(fs, fwd);
}

/// p ↓ q: a common reduct under E⁻ ∪ F.
inline BitMatrix joinable(const FlatSystem& fs, const BitMatrix& fwd) {
  return peak_closure(fs, fwd.transpose());
}

/// One row per constant, one column per constant, '1' where related, '.' elsewhere.
std::string render(const BitMatrix& m);

} // namespace gtrs
