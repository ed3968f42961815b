#include "gtrs/nf_automaton.hpp"

#include "gtrs/horn.hpp"

namespace gtrs {

NfAutomaton::NfAutomaton(const FlatSystem& fs) : fs_(&fs) {
  std::vector<std::size_t> seeds;
  for (const FlatRule& r : fs.rules()) seeds.push_back(r.lhs);
  auto rules = fs.app_rules();
  reducible_ = solve(fs.size(), seeds, [&](std::size_t p, HornSolver& h) {
    for (std::uint32_t i : fs.with_arg(static_cast<FlatId>(p))) h.derive(rules[i].result);
  });
}

std::vector<StateId> NfAutomaton::states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < star(); ++q) {
    if (!reducible_.test(q)) out.push_back(q);
  }
  out.push_back(star());
  return out;
}

std::optional<StateId> NfAutomaton::delta(SymbolId c) const {
  if (auto p = fs_->constant(c)) {
    if (reducible_.test(*p)) return std::nullopt;
    return *p;
  }
  return star();
}

std::optional<StateId> NfAutomaton::delta(StateId left, StateId right) const {
  if (left != star() && right != star()) {
    if (auto p = fs_->app(left, right)) {
      if (reducible_.test(*p)) return std::nullopt;
      return *p;
    }
  }
  return star();
}

std::optional<StateId> NfAutomaton::run(const CurriedTrs& ctrs, TermId t) const {
  const TermStore& store = ctrs.trs.store;
  std::unordered_map<TermId, std::optional<StateId>> state;
  for (TermId u : subterm_set(store, t)) {
    std::optional<StateId> q;
    if (store.head(u) != ctrs.app) {
      q = delta(store.head(u));
    } else {
      auto l = state.at(store.args(u)[0]);
      auto r = state.at(store.args(u)[1]);
      if (l && r) q = delta(*l, *r);
    }
    state.emplace(u, q);
  }
  return state.at(t);
}

std::vector<NfTransition> NfAutomaton::transitions() const {
  std::vector<NfTransition> out;
  for (const ConstRule& r : fs_->const_rules()) {
    if (!reducible_.test(r.result)) {
      out.push_back({NfTransition::Kind::constant, r.symbol, 0, 0, r.result});
    }
  }
  auto qs = states();
  for (StateId l : qs) {
    for (StateId r : qs) {
      if (auto q = delta(l, r)) out.push_back({NfTransition::Kind::app, SymbolId{}, l, r, *q});
    }
  }
  return out;
}

} // namespace gtrs
