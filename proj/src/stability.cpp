#include "gtrs/stability.hpp"

#include "gtrs/horn.hpp"

namespace gtrs {

BitMatrix nf_pairs(const FlatSystem& fs, const BitMatrix& fwd) {
  const std::size_t n = fs.size();
  BitMatrix pred = fwd.transpose();
  BitMatrix reducible(n);
  for (const AppRule& r : fs.app_rules()) {
    for_each_bit(pred.row(r.left), [&](std::size_t p) {
      for_each_bit(pred.row(r.right), [&](std::size_t q) { reducible.set(p, q); });
    });
  }
  BitMatrix nf(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!reducible(p, q)) nf.set(p, q);
    }
  }
  return nf;
}

std::vector<std::uint32_t> StabilityTables::sides() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t t = 0; t < transition_count_; ++t) {
    if (ts_.test(t)) out.push_back(t);
  }
  return out;
}

std::vector<ClassId> StabilityTables::constants() const {
  std::vector<ClassId> out;
  for (std::size_t c = 0; c + transition_count_ < ts_.size(); ++c) {
    if (ts_.test(transition_count_ + c)) out.push_back(static_cast<ClassId>(c));
  }
  return out;
}

StabilityTables top_stabilizable(const FlatSystem& fs, const CongruenceClosure& cc, BitMatrix nf,
                                 CurriedTrs& ctrs) {
  TermStore& store = ctrs.trs.store;
  auto transitions = cc.transitions();
  const std::size_t tcount = transitions.size();
  const std::size_t n = fs.size();

  StabilityTables st;
  st.transition_count_ = tcount;
  st.side_term_.resize(tcount);
  st.const_term_.resize(cc.class_count());

  HornSolver solver(tcount + cc.class_count());
  auto rep = [&](ClassId c) { return fs.subterm(cc.representative(c)); };

  // nf
  for (FlatId p = 0; p < n; ++p) {
    for_each_bit(nf.row(p), [&](std::size_t q) {
      auto t = cc.transition(cc.class_of(p), cc.class_of(static_cast<FlatId>(q)));
      if (t && solver.derive(*t)) {
        st.side_term_[*t] = store.make(ctrs.app, {fs.subterm(p), fs.subterm(static_cast<FlatId>(q))});
      }
    });
  }
  solver.saturate([&](std::size_t atom) {
    if (atom < tcount) {
      // ts0
      ClassId c = transitions[atom].result;
      if (solver.derive(tcount + c)) st.const_term_[c] = st.side_term_[atom];
      return;
    }
    // ts1 / ts2
    auto c = static_cast<ClassId>(atom - tcount);
    for (std::uint32_t t : cc.transitions_with(c)) {
      if (!solver.derive(t)) continue;
      const ClassTransition& tr = transitions[t];
      st.side_term_[t] = tr.left == c
                             ? store.make(ctrs.app, {st.const_term_[c], rep(tr.right)})
                             : store.make(ctrs.app, {rep(tr.left), st.const_term_[c]});
    }
  });
  st.ts_ = solver.facts();
  st.nf_ = std::move(nf);
  return st;
}

} // namespace gtrs
