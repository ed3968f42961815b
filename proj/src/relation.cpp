#include "gtrs/relation.hpp"

namespace gtrs {

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(size());
  for (std::size_t p = 0; p < size(); ++p) for_each_bit(rows_[p], [&](std::size_t q) { t.set(q, p); });
  return t;
}

std::size_t BitMatrix::count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

bool BitMatrix::symmetric() const { return *this == transpose(); }

std::string render(const BitMatrix& m) {
  std::string out;
  for (std::size_t p = 0; p < m.size(); ++p) {
    for (std::size_t q = 0; q < m.size(); ++q) out += m(p, q) ? '1' : '.';
    out += '\n';
  }
  return out;
}

namespace {

// Horn solver over pairs, mirroring derived pairs into a matrix and its
// transpose so both rows and columns can be scanned.
class PairClosure {
public:
  PairClosure(std::size_t n, Discipline d) : n_(n), solver_(n * n, d), rel_(n), inv_(n) {}

  void derive(std::size_t p, std::size_t q) {
    if (solver_.derive(p * n_ + q)) {
      rel_.set(p, q);
      inv_.set(q, p);
    }
  }
  template <class Fire> void saturate(Fire&& fire) {
    solver_.saturate([&](std::size_t atom) { fire(atom / n_, atom % n_); });
  }

  const BitMatrix& rel() const { return rel_; }
  const BitMatrix& inv() const { return inv_; }
  BitMatrix take() { return std::move(rel_); }

private:
  std::size_t n_;
  HornSolver solver_;
  BitMatrix rel_, inv_;
};

} // namespace

BitMatrix rewrite_closure(const FlatSystem& fs, Discipline discipline) {
  const std::size_t n = fs.size();
  PairClosure c(n, discipline);
  auto rules = fs.app_rules();
  for (FlatId p = 0; p < n; ++p) c.derive(p, p);
  for (const FlatRule& r : fs.rules()) c.derive(r.lhs, r.rhs);

  c.saturate([&](std::size_t p, std::size_t q) {
    // trans, with p -> q as either premise
    for_each_bit(c.inv().row(p), [&](std::size_t r) { c.derive(r, q); });
    for_each_bit(c.rel().row(q), [&](std::size_t r) { c.derive(p, r); });
    // cong, with p -> q as the left or right argument step
    for (std::uint32_t i : fs.with_left(static_cast<FlatId>(p))) {
      for (std::uint32_t j : fs.with_left(static_cast<FlatId>(q))) {
        if (c.rel()(rules[i].right, rules[j].right)) c.derive(rules[i].result, rules[j].result);
      }
    }
    for (std::uint32_t i : fs.with_right(static_cast<FlatId>(p))) {
      for (std::uint32_t j : fs.with_right(static_cast<FlatId>(q))) {
        if (c.rel()(rules[i].left, rules[j].left)) c.derive(rules[i].result, rules[j].result);
      }
    }
  });
  return c.take();
}

BitMatrix peak_closure(const FlatSystem& fs, const BitMatrix& steps, Discipline discipline) {
  const std::size_t n = fs.size();
  PairClosure c(n, discipline);
  auto rules = fs.app_rules();
  for (FlatId p = 0; p < n; ++p) c.derive(p, p);

  c.saturate([&](std::size_t a, std::size_t b) {
    for_each_bit(steps.row(a), [&](std::size_t p) { c.derive(p, b); });
    for_each_bit(steps.row(b), [&](std::size_t r) { c.derive(a, r); });
    for (std::uint32_t i : fs.with_left(static_cast<FlatId>(a))) {
      for (std::uint32_t j : fs.with_left(static_cast<FlatId>(b))) {
        if (c.rel()(rules[i].right, rules[j].right)) c.derive(rules[i].result, rules[j].result);
      }
    }
    for (std::uint32_t i : fs.with_right(static_cast<FlatId>(a))) {
      for (std::uint32_t j : fs.with_right(static_cast<FlatId>(b))) {
        if (c.rel()(rules[i].left, rules[j].left)) c.derive(rules[i].result, rules[j].result);
      }
    }
  });
  return c.take();
}

} // namespace gtrs
