#include "gtrs/analysis.hpp"

namespace gtrs {

std::unique_ptr<Analysis> Analysis::create(Trs trs) {
  return std::unique_ptr<Analysis>(new Analysis(std::move(trs)));
}

Analysis::Analysis(Trs trs) : source_(std::move(trs)) {
  curried_ = timed("curry", [&] { return curry(source_); });
  flat_.emplace(timed("flatten", [&] { return flatten(curried_); }));
}

const CongruenceClosure& Analysis::congruence() {
  if (!cc_) cc_.emplace(timed("congruence", [&] { return congruence_closure(*flat_); }));
  return *cc_;
}

const NfAutomaton& Analysis::automaton() {
  if (!nfa_) {
    auto start = std::chrono::steady_clock::now();
    nfa_.emplace(*flat_);
    std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    timings_.push_back({"automaton", d.count()});
  }
  return *nfa_;
}

const BitMatrix& Analysis::forward() {
  if (!fwd_) fwd_.emplace(timed("rewrite_closure", [&] { return rewrite_closure(*flat_); }));
  return *fwd_;
}

const BitMatrix& Analysis::meet() {
  if (!meet_) {
    const BitMatrix& f = forward();
    meet_.emplace(timed("meetable", [&] { return meetable(*flat_, f); }));
  }
  return *meet_;
}

const BitMatrix& Analysis::join() {
  if (!join_) {
    const BitMatrix& f = forward();
    join_.emplace(timed("joinable", [&] { return joinable(*flat_, f); }));
  }
  return *join_;
}

const StabilityTables& Analysis::stability() {
  if (!st_) {
    const BitMatrix& f = forward();
    const CongruenceClosure& cc = congruence();
    st_.emplace(timed("stability", [&] {
      return top_stabilizable(*flat_, cc, nf_pairs(*flat_, f), curried_);
    }));
  }
  return *st_;
}

Verdict Analysis::decide(Property p) {
  const CongruenceClosure& cc = congruence();
  switch (p) {
  case Property::unc: {
    const NfAutomaton& nfa = automaton();
    return timed("decide_unc", [&] { return decide_unc(*flat_, cc, nfa, curried_); });
  }
  case Property::unr: {
    const NfAutomaton& nfa = automaton();
    const BitMatrix& f = forward();
    const BitMatrix& m = meet();
    return timed("decide_unr", [&] { return decide_unr(*flat_, cc, f, m, nfa, curried_); });
  }
  case Property::nfp: {
    const NfAutomaton& nfa = automaton();
    const BitMatrix& f = forward();
    const StabilityTables& st = stability();
    return timed("decide_nfp", [&] { return decide_nfp(*flat_, cc, f, nfa, st, curried_); });
  }
  case Property::cr: {
    const BitMatrix& f = forward();
    const BitMatrix& j = join();
    const StabilityTables& st = stability();
    return timed("decide_cr", [&] { return decide_cr(*flat_, cc, f, j, st); });
  }
  }
  throw InternalError("unknown property");
}

std::array<Verdict, 4> Analysis::decide_all() {
  std::array<Verdict, 4> out;
  for (std::size_t i = 0; i < all_properties.size(); ++i) out[i] = decide(all_properties[i]);
  check_implication_chain(out);
  return out;
}

InputStats Analysis::stats() const {
  return {total_size(source_), source_.rules.size(), flat_->size()};
}

} // namespace gtrs
