#include "gtrs/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <unordered_set>

#include "gtrs/relation.hpp"

namespace gtrs::oracle {

SearchBudget default_budget(const Trs& trs) {
  std::uint64_t largest = 1;
  for (const Rule& r : trs.rules) {
    largest = std::max({largest, term_size(trs.store, r.lhs), term_size(trs.store, r.rhs)});
  }
  SearchBudget b;
  b.max_term_size = 3 * largest;
  return b;
}

std::vector<FlatId> naive_congruence(const FlatSystem& fs) {
  const std::size_t n = fs.size();
  std::vector<FlatId> label(n);
  for (FlatId p = 0; p < n; ++p) label[p] = p;
  auto merge = [&](FlatId x, FlatId y) {
    FlatId lx = label[x], ly = label[y];
    if (lx == ly) return false;
    FlatId keep = std::min(lx, ly), drop = std::max(lx, ly);
    for (FlatId& l : label) {
      if (l == drop) l = keep;
    }
    return true;
  };
  auto apps = fs.app_rules();
  for (bool changed = true; changed;) {
    changed = false;
    for (const FlatRule& r : fs.rules()) changed |= merge(r.lhs, r.rhs);
    for (std::size_t i = 0; i < apps.size(); ++i) {
      for (std::size_t j = i + 1; j < apps.size(); ++j) {
        if (label[apps[i].left] == label[apps[j].left] &&
            label[apps[i].right] == label[apps[j].right]) {
          changed |= merge(apps[i].result, apps[j].result);
        }
      }
    }
  }
  return label;
}

Rewriter::Rewriter(Trs& trs) : trs_(trs) {
  for (const Rule& r : trs.rules) by_lhs_.emplace(r.lhs, r.rhs);
}

const std::vector<TermId>& Rewriter::successors(TermId t) {
  if (auto it = succ_.find(t); it != succ_.end()) return it->second;
  std::vector<TermId> out;
  auto [lo, hi] = by_lhs_.equal_range(t);
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  TermStore& store = trs_.store;
  const SymbolId head = store.head(t);
  const auto span = store.args(t);
  const std::vector<TermId> args(span.begin(), span.end());
  for (std::size_t i = 0; i < args.size(); ++i) {
    for (TermId s : successors(args[i])) {
      std::vector<TermId> next = args;
      next[i] = s;
      out.push_back(store.make(head, next));
    }
  }
  std::unordered_set<TermId> seen;
  std::erase_if(out, [&](TermId u) { return !seen.insert(u).second; });
  return succ_.emplace(t, std::move(out)).first->second;
}

bool Rewriter::is_normal_form(TermId t) {
  if (auto it = normal_.find(t); it != normal_.end()) return it->second;
  bool nf = by_lhs_.count(t) == 0;
  for (std::size_t i = 0; nf && i < trs_.store.args(t).size(); ++i) {
    nf = is_normal_form(trs_.store.args(t)[i]);
  }
  normal_.emplace(t, nf);
  return nf;
}

std::uint64_t Rewriter::size(TermId t) {
  if (auto it = size_.find(t); it != size_.end()) return it->second;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < trs_.store.args(t).size(); ++i) n += size(trs_.store.args(t)[i]);
  size_.emplace(t, n);
  return n;
}

const Rewriter::Reducts& Rewriter::reducts(TermId t, const SearchBudget& budget) {
  if (auto it = reducts_.find(t); it != reducts_.end()) return it->second;
  Reducts r;
  r.complete = explore(t, budget, [&](TermId u) {
    r.terms.push_back(u);
    return false;
  });
  return reducts_.emplace(t, std::move(r)).first->second;
}

Search Rewriter::reach(TermId s, TermId t, const SearchBudget& budget) {
  if (auto it = reducts_.find(s); it != reducts_.end()) {
    const auto& ts = it->second.terms;
    if (std::find(ts.begin(), ts.end(), t) != ts.end()) return Search::found;
    if (it->second.complete) return Search::absent;
  }
  // widen the size bound gradually: short detours through small terms are
  // found long before the full bound exhausts the frontier
  SearchBudget b = budget;
  b.max_term_size = std::min(budget.max_term_size, std::max(size(s), size(t)) + 1);
  for (;;) {
    bool hit = false;
    bool complete = explore(s, b, [&](TermId u) { return hit = (u == t); });
    if (hit) return Search::found;
    if (b.max_term_size >= budget.max_term_size) return complete ? Search::absent : Search::unknown;
    b.max_term_size = std::min(budget.max_term_size, b.max_term_size + 2);
  }
}

template <class Visit> bool Rewriter::explore(TermId t, const SearchBudget& budget, Visit&& visit) {
  std::vector<TermId> queue{t};
  std::unordered_set<TermId> seen{t};
  if (visit(t)) return false;
  bool complete = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (head >= budget.max_steps) return false;
    ++steps_;
    for (TermId v : successors(queue[head])) {
      if (size(v) > budget.max_term_size) {
        complete = false;
        continue;
      }
      if (!seen.insert(v).second) continue;
      if (queue.size() >= budget.max_frontier) return false;
      queue.push_back(v);
      if (visit(v)) return false;
    }
  }
  return complete;
}

namespace {

// Ground terms over the signature of `store` in order of size, starting with
// the rule subterms.
std::vector<TermId> start_terms(Trs& trs, std::uint64_t max_size, std::size_t cap) {
  TermStore& store = trs.store;
  std::vector<TermId> out;
  std::unordered_set<TermId> seen;
  auto add = [&](TermId t) {
    if (out.size() < cap && seen.insert(t).second) out.push_back(t);
  };
  for (TermId t : subterm_set(trs)) add(t);

  std::vector<SymbolId> symbols;
  for (std::uint32_t i = 0; i < store.symbol_count(); ++i) symbols.push_back(SymbolId{i});
  std::vector<std::vector<TermId>> by_size(max_size + 1);
  for (std::uint64_t k = 1; k <= max_size && out.size() < cap; ++k) {
    for (SymbolId f : symbols) {
      const unsigned m = store.info(f).arity;
      if (m == 0) {
        if (k == 1) by_size[1].push_back(store.make(f, {}));
        continue;
      }
      if (k < m + 1) continue;
      // distribute k - 1 over m arguments, each at least 1
      std::vector<TermId> args(m);
      std::function<void(unsigned, std::uint64_t)> fill = [&](unsigned i, std::uint64_t left) {
        if (by_size[k].size() > cap) return;
        if (i + 1 == m) {
          for (TermId a : by_size[left]) {
            args[i] = a;
            by_size[k].push_back(store.make(f, args));
          }
          return;
        }
        for (std::uint64_t s = 1; s + (m - i - 1) <= left; ++s) {
          for (TermId a : by_size[s]) {
            args[i] = a;
            fill(i + 1, left - s);
          }
        }
      };
      fill(0, k - 1);
    }
    for (TermId t : by_size[k]) add(t);
  }
  return out;
}

class Components {
public:
  TermId find(TermId t) {
    auto it = parent_.find(t);
    if (it == parent_.end()) {
      parent_.emplace(t, t);
      return t;
    }
    if (it->second == t) return t;
    TermId root = find(it->second);
    parent_[t] = root;
    return root;
  }
  void unite(TermId a, TermId b) {
    TermId ra = find(a), rb = find(b);
    if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<TermId>> groups() {
    std::unordered_map<TermId, std::size_t> slot;
    std::vector<std::vector<TermId>> out;
    std::vector<TermId> keys;
    for (auto& [t, _] : parent_) keys.push_back(t);
    std::sort(keys.begin(), keys.end());
    for (TermId t : keys) {
      auto [it, fresh] = slot.emplace(find(t), out.size());
      if (fresh) out.emplace_back();
      out[it->second].push_back(t);
    }
    return out;
  }

private:
  std::unordered_map<TermId, TermId> parent_;
};

} // namespace

Refutations refute_all(Trs& trs, const SearchBudget& budget) {
  Refutations out;
  auto slot = [&](Property p) -> std::optional<Counterexample>& {
    return out[static_cast<std::size_t>(p)];
  };
  Rewriter rw(trs);
  Components comp;
  for (TermId u : start_terms(trs, budget.max_term_size, budget.max_start_terms)) {
    if (rw.steps() > budget.max_steps) break;
    const auto& r = rw.reducts(u, budget);
    std::vector<TermId> nfs;
    for (TermId v : r.terms) {
      comp.unite(u, v);
      if (rw.is_normal_form(v)) nfs.push_back(v);
    }
    if (!slot(Property::unr) && nfs.size() >= 2) {
      slot(Property::unr) = Counterexample{nfs[0], nfs[1], u, "two normal forms of one term"};
    }
  }

  for (const auto& group : comp.groups()) {
    std::vector<TermId> nfs;
    for (TermId t : group) {
      if (rw.is_normal_form(t)) nfs.push_back(t);
    }
    if (!slot(Property::unc) && nfs.size() >= 2) {
      slot(Property::unc) = Counterexample{nfs[0], nfs[1], {}, "convertible normal forms"};
    }
    if (slot(Property::nfp) && slot(Property::cr)) continue;
    // only terms whose reduct sets are known in full can refute NFP and CR
    std::vector<const Rewriter::Reducts*> full;
    std::vector<TermId> full_terms;
    for (TermId t : group) {
      if (rw.steps() > budget.max_steps) break;
      const auto& r = rw.reducts(t, budget);
      if (r.complete) {
        full.push_back(&r);
        full_terms.push_back(t);
      }
    }
    for (TermId nf : nfs) {
      for (std::size_t i = 0; i < full.size() && !slot(Property::nfp); ++i) {
        const auto& ts = full[i]->terms;
        if (std::find(ts.begin(), ts.end(), nf) == ts.end()) {
          slot(Property::nfp) =
              Counterexample{full_terms[i], nf, {}, "convertible to a normal form it does not reach"};
        }
      }
    }
    const std::size_t limit = std::min<std::size_t>(full.size(), 200);
    for (std::size_t i = 0; i < limit && !slot(Property::cr); ++i) {
      std::unordered_set<TermId> mine(full[i]->terms.begin(), full[i]->terms.end());
      for (std::size_t j = i + 1; j < limit; ++j) {
        const auto& theirs = full[j]->terms;
        bool meet = std::any_of(theirs.begin(), theirs.end(),
                                [&](TermId t) { return mine.count(t) > 0; });
        if (!meet) {
          slot(Property::cr) =
              Counterexample{full_terms[i], full_terms[j], {}, "convertible without common reduct"};
          break;
        }
      }
    }
  }
  return out;
}

std::optional<Counterexample> refute_property(Trs& trs, Property p, const SearchBudget& budget) {
  return refute_all(trs, budget)[static_cast<std::size_t>(p)];
}

WitnessCheck verify_witness(CurriedTrs& ctrs, const Verdict& v) {
  if (v.holds || !v.witness) return {false, "verdict carries no witness"};
  const TermId s = v.witness->s, t = v.witness->t;
  TermStore& store = ctrs.trs.store;
  if (!store.valid(s) || !store.valid(t)) return {false, "witness term outside the store"};
  if (s == t) return {false, "witness terms are not distinct"};

  Rewriter rw(ctrs.trs);
  const std::array<TermId, 2> extra{s, t};
  FlatSystem ext = flatten(ctrs, extra);
  const FlatId ps = *ext.find(s), pt = *ext.find(t);
  const auto labels = naive_congruence(ext);
  const bool convertible = labels[ps] == labels[pt];
  const BitMatrix fwd = rewrite_closure(ext);

  // bounded search only as a second opinion on small witnesses
  constexpr std::uint64_t small = 64;
  const bool searchable = term_size(store, s) <= small && term_size(store, t) <= small;
  SearchBudget budget = default_budget(ctrs.trs);
  budget.max_term_size =
      std::max({budget.max_term_size, 2 * term_size(store, s), 2 * term_size(store, t)});

  switch (v.property) {
  case Property::unc:
    if (!rw.is_normal_form(s) || !rw.is_normal_form(t)) return {false, "not a normal form"};
    if (!convertible) return {false, "not convertible"};
    return {true, {}};
  case Property::unr:
    if (!rw.is_normal_form(s) || !rw.is_normal_form(t)) return {false, "not a normal form"};
    if (!convertible) return {false, "not convertible"};
    if (!meetable(ext, fwd)(ps, pt)) return {false, "no common ancestor"};
    return {true, {}};
  case Property::nfp:
    if (!rw.is_normal_form(t)) return {false, "target is not a normal form"};
    if (!convertible) return {false, "not convertible"};
    if (fwd(ps, pt)) return {false, "source reduces to the normal form"};
    if (searchable && rw.reach(s, t, budget) == Search::found) {
      return {false, "bounded search reaches the normal form"};
    }
    return {true, {}};
  case Property::cr: {
    if (!convertible) return {false, "not convertible"};
    if (joinable(ext, fwd)(ps, pt)) return {false, "terms are joinable"};
    if (searchable) {
      const auto& a = rw.reducts(s, budget).terms;
      std::unordered_set<TermId> mine(a.begin(), a.end());
      for (TermId u : rw.reducts(t, budget).terms) {
        if (mine.count(u)) return {false, "bounded search finds a common reduct"};
      }
    }
    return {true, {}};
  }
  }
  return {false, "unknown property"};
}

Trs gen_random_trs(const TrsGenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  auto pick = [&](unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng); };
  auto coin = [&] { return std::bernoulli_distribution(0.5)(rng); };
  auto nth_name = [](std::string_view letters, unsigned i) {
    std::string s(1, letters[i % letters.size()]);
    if (i >= letters.size()) s += std::to_string(i / letters.size());
    return s;
  };

  Trs trs;
  TermStore& store = trs.store;
  const unsigned constants = std::max(1u, spec.constants);
  std::function<TermId(unsigned)> term = [&](unsigned depth) -> TermId {
    const unsigned funcs = spec.unary + spec.binary;
    if (depth == 0 || funcs == 0 || coin()) return store.constant(nth_name("abcde", pick(constants)));
    unsigned f = pick(funcs);
    if (f < spec.unary) return store.make(store.symbol(nth_name("fg", f), 1), {term(depth - 1)});
    TermId l = term(depth - 1);
    TermId r = term(depth - 1);
    return store.make(store.symbol(nth_name("hk", f - spec.unary), 2), {l, r});
  };
  for (unsigned i = 0; i < spec.rules; ++i) {
    TermId lhs = term(spec.max_depth);
    TermId rhs = term(spec.max_depth);
    trs.rules.push_back({lhs, rhs});
  }
  return trs;
}

} // namespace gtrs::oracle
