#include "gtrs/deciders.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>

namespace gtrs {

std::string_view name(Property p) {
  switch (p) {
  case Property::cr: return "CR";
  case Property::nfp: return "NFP";
  case Property::unc: return "UNC";
  case Property::unr: return "UNR";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (Property p : all_properties) {
    std::string n(name(p));
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (n == lower) return p;
  }
  return std::nullopt;
}

namespace {

using ConstHook = std::function<std::optional<Witness>(ClassId, FlatId, TermId)>;
using AppHook = std::function<std::optional<Witness>(std::uint32_t, TermId)>;

// Enumerates accepting runs of C × N bottom-up. Stops at the first class
// reached twice (reported with `repeat_condition`) or the first hook
// violation.
std::optional<Witness> enumerate_runs(const FlatSystem& fs, const CongruenceClosure& cc,
                                      const NfAutomaton& nfa, CurriedTrs& ctrs,
                                      int repeat_condition, const ConstHook& on_const,
                                      const AppHook& on_app, DecisionStats& stats) {
  struct Item {
    ClassId p;
    StateId q;
    TermId s;
  };
  struct Seen {
    StateId q;
    TermId s;
  };
  TermStore& store = ctrs.trs.store;
  std::deque<Item> worklist;
  std::vector<std::optional<Seen>> seen(cc.class_count());

  for (const ConstRule& r : fs.const_rules()) {
    auto q = nfa.delta(r.symbol);
    if (!q) continue;
    Item item{cc.class_of(r.result), *q, fs.subterm(r.result)};
    worklist.push_back(item);
    ++stats.pushed;
    if (on_const) {
      if (auto w = on_const(item.p, r.result, item.s)) return w;
    }
  }
  auto transitions = cc.transitions();
  while (!worklist.empty()) {
    Item item = worklist.front();
    worklist.pop_front();
    if (seen[item.p]) return Witness{repeat_condition, seen[item.p]->s, item.s, item.p, {}};
    seen[item.p] = Seen{item.q, item.s};
    for (std::uint32_t t : cc.transitions_with(item.p)) {
      const ClassTransition& tr = transitions[t];
      if (!seen[tr.left] || !seen[tr.right]) continue;
      auto qr = nfa.delta(seen[tr.left]->q, seen[tr.right]->q);
      if (!qr) continue;
      TermId s = store.make(ctrs.app, {seen[tr.left]->s, seen[tr.right]->s});
      worklist.push_back(Item{tr.result, *qr, s});
      ++stats.pushed;
      if (on_app) {
        if (auto w = on_app(t, s)) return w;
      }
    }
  }
  return std::nullopt;
}

Verdict make_verdict(Property p, std::optional<Witness> w, DecisionStats stats) {
  Verdict v;
  v.property = p;
  v.holds = !w.has_value();
  v.witness = std::move(w);
  v.stats = stats;
  return v;
}

// TS sides grouped by the class they rewrite to.
std::vector<std::vector<std::uint32_t>> stable_sides_by_result(const CongruenceClosure& cc,
                                                               const StabilityTables& st) {
  std::vector<std::vector<std::uint32_t>> out(cc.class_count());
  for (std::uint32_t t : st.sides()) out[cc.transitions()[t].result].push_back(t);
  return out;
}

} // namespace

Verdict decide_unc(const FlatSystem& fs, const CongruenceClosure& cc, const NfAutomaton& nfa,
                   CurriedTrs& ctrs) {
  DecisionStats stats;
  auto w = enumerate_runs(fs, cc, nfa, ctrs, 1, nullptr, nullptr, stats);
  return make_verdict(Property::unc, std::move(w), stats);
}

UnrFirst unr_first(const FlatSystem& fs, const BitMatrix& fwd, const NfAutomaton& nfa,
                   CurriedTrs& ctrs) {
  struct Item {
    FlatId p;
    StateId q;
    TermId s;
  };
  TermStore& store = ctrs.trs.store;
  const std::size_t n = fs.size();
  UnrFirst out;
  out.w.assign(n, std::nullopt);
  out.n.assign(n, 0);
  BitMatrix pred = fwd.transpose();
  auto rules = fs.app_rules();

  std::vector<Item> worklist;
  auto push = [&](Item item) {
    worklist.push_back(item);
    ++out.stats.pushed;
  };
  for (const ConstRule& r : fs.const_rules()) {
    if (auto q = nfa.delta(r.symbol)) push(Item{r.result, *q, fs.subterm(r.result)});
  }
  while (!worklist.empty()) {
    Item item = worklist.back();
    worklist.pop_back();
    if (out.w[item.p]) {
      if (*out.w[item.p] != item.s) {
        out.violation = Witness{1, *out.w[item.p], item.s, 0, item.p};
        return out;
      }
      continue;
    }
    out.w[item.p] = item.s;
    out.n[item.p] = item.q;
    for (std::uint32_t i : fs.with_arg(item.p)) {
      const AppRule& r = rules[i];
      if (!out.w[r.left] || !out.w[r.right]) continue;
      if (auto qr = nfa.delta(out.n[r.left], out.n[r.right])) {
        push(Item{r.result, *qr, store.make(ctrs.app, {*out.w[r.left], *out.w[r.right]})});
      }
    }
    for_each_bit(pred.row(item.p), [&](std::size_t p) {
      push(Item{static_cast<FlatId>(p), item.q, item.s});
    });
  }
  return out;
}

Verdict unr_second(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                   const BitMatrix& meet, const UnrFirst& first, const NfAutomaton& nfa,
                   CurriedTrs& ctrs) {
  // A cell holds one element of W'(p,q), or two distinct ones standing for
  // the saturated value (at least two elements).
  struct Value {
    bool many = false;
    TermId a{};
    TermId b{};
  };
  struct Cell {
    bool defined = false;
    std::uint8_t updates = 0;
    Value v;
  };
  struct Item {
    FlatId p;
    StateId q;
    Value v;
  };
  TermStore& store = ctrs.trs.store;
  const std::size_t n = fs.size();
  const std::size_t states = n + 1;
  auto rules = fs.app_rules();
  DecisionStats stats;

  std::vector<Cell> cells(n * states);
  std::vector<std::vector<StateId>> defined(n);
  auto cell = [&](FlatId p, StateId q) -> Cell& { return cells[p * states + q]; };

  std::vector<Item> worklist;
  auto push = [&](Item item) {
    worklist.push_back(item);
    ++stats.pushed;
  };
  auto compose = [&](const Value& l, const Value& r) {
    Value v;
    v.a = store.make(ctrs.app, {l.a, r.a});
    v.many = l.many || r.many;
    if (v.many) v.b = store.make(ctrs.app, {l.many ? l.b : l.a, r.many ? r.b : r.a});
    return v;
  };

  for (FlatId p = 0; p < n; ++p) {
    for_each_bit(meet.row(p), [&](std::size_t q) {
      if (first.w[q]) push(Item{p, first.n[q], Value{false, *first.w[q], {}}});
    });
  }
  while (!worklist.empty()) {
    Item item = worklist.back();
    worklist.pop_back();
    Cell& c = cell(item.p, item.q);
    if (c.defined) {
      if (c.v.many) continue;
      if (!item.v.many && item.v.a == c.v.a) continue;
      TermId other = item.v.a != c.v.a ? item.v.a : item.v.b;
      c.v = Value{true, c.v.a, other};
    } else {
      c.defined = true;
      c.v = item.v;
      defined[item.p].push_back(item.q);
    }
    ++c.updates;
    stats.max_cell_updates = std::max<std::size_t>(stats.max_cell_updates, c.updates);
    const Value v = c.v;

    if (auto t = first.w[item.p]) {
      if (v.many || v.a != *t) {
        TermId s = v.a != *t ? v.a : v.b;
        return make_verdict(Property::unr, Witness{2, *t, s, cc.class_of(item.p), item.p}, stats);
      }
    }
    for (std::uint32_t i : fs.with_arg(item.p)) {
      const AppRule& r = rules[i];
      if (r.left == item.p) {
        for (StateId q2 : defined[r.right]) {
          if (auto qr = nfa.delta(item.q, q2)) {
            push(Item{r.result, *qr, compose(v, cell(r.right, q2).v)});
          }
        }
      }
      if (r.right == item.p) {
        for (StateId q1 : defined[r.left]) {
          if (auto qr = nfa.delta(q1, item.q)) {
            push(Item{r.result, *qr, compose(cell(r.left, q1).v, v)});
          }
        }
      }
    }
    for_each_bit(fwd.row(item.p), [&](std::size_t p) {
      push(Item{static_cast<FlatId>(p), item.q, v});
    });
  }
  return make_verdict(Property::unr, std::nullopt, stats);
}

Verdict decide_unr(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                   const BitMatrix& meet, const NfAutomaton& nfa, CurriedTrs& ctrs) {
  UnrFirst first = unr_first(fs, fwd, nfa, ctrs);
  if (first.violation) {
    first.violation->pivot_class = cc.class_of(*first.violation->pivot_flat);
    return make_verdict(Property::unr, first.violation, first.stats);
  }
  Verdict v = unr_second(fs, cc, fwd, meet, first, nfa, ctrs);
  v.stats.pushed += first.stats.pushed;
  return v;
}

Verdict decide_nfp(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                   const NfAutomaton& nfa, const StabilityTables& st, CurriedTrs& ctrs) {
  auto stable_into = stable_sides_by_result(cc, st);
  auto transitions = cc.transitions();
  auto rules = fs.app_rules();

  ConstHook on_const = [&](ClassId cls, FlatId c, TermId term) -> std::optional<Witness> {
    for (FlatId p : cc.members(cls)) {
      if (!fwd(p, c)) return Witness{1, fs.subterm(p), term, cls, p};
    }
    if (!stable_into[cls].empty()) {
      return Witness{2, st.side_witness(stable_into[cls].front()), term, cls, {}};
    }
    return std::nullopt;
  };
  AppHook on_app = [&](std::uint32_t t, TermId term) -> std::optional<Witness> {
    ClassId pr = transitions[t].result;
    auto sources = cc.sources(t);
    for (FlatId q : cc.members(pr)) {
      bool reaches = std::any_of(sources.begin(), sources.end(),
                                 [&](std::uint32_t i) { return fwd(q, rules[i].result); });
      if (!reaches) return Witness{3, fs.subterm(q), term, pr, q};
    }
    for (std::uint32_t other : stable_into[pr]) {
      if (other != t) return Witness{4, st.side_witness(other), term, pr, {}};
    }
    return std::nullopt;
  };

  DecisionStats stats;
  auto w = enumerate_runs(fs, cc, nfa, ctrs, 0, on_const, on_app, stats);
  return make_verdict(Property::nfp, std::move(w), stats);
}

Verdict decide_cr(const FlatSystem& fs, const CongruenceClosure& cc, const BitMatrix& fwd,
                  const BitMatrix& join, const StabilityTables& st) {
  auto rules = fs.app_rules();
  auto transitions = cc.transitions();
  DecisionStats stats;

  for (ClassId c = 0; c < cc.class_count(); ++c) {
    auto m = cc.members(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!join(m[i], m[j])) {
          return make_verdict(Property::cr,
                              Witness{3, fs.subterm(m[i]), fs.subterm(m[j]), c, m[i]}, stats);
        }
      }
    }
  }

  auto stable_into = stable_sides_by_result(cc, st);
  for (ClassId c = 0; c < cc.class_count(); ++c) {
    if (stable_into[c].size() > 1) {
      return make_verdict(Property::cr,
                          Witness{1, st.side_witness(stable_into[c][0]),
                                  st.side_witness(stable_into[c][1]), c, {}},
                          stats);
    }
  }

  for (std::uint32_t t : st.sides()) {
    ClassId p = transitions[t].result;
    auto sources = cc.sources(t);
    for (FlatId target : cc.members(p)) {
      bool ok = std::any_of(sources.begin(), sources.end(),
                            [&](std::uint32_t i) { return fwd(target, rules[i].result); });
      if (!ok) {
        return make_verdict(Property::cr,
                            Witness{2, st.side_witness(t), fs.subterm(target), p, target}, stats);
      }
    }
  }
  return make_verdict(Property::cr, std::nullopt, stats);
}

void check_implication_chain(const std::array<Verdict, 4>& verdicts) {
  auto holds = [&](Property p) {
    for (const Verdict& v : verdicts) {
      if (v.property == p) return v.holds;
    }
    throw InternalError("missing verdict for " + std::string(name(p)));
  };
  const Property chain[] = {Property::cr, Property::nfp, Property::unc, Property::unr};
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
    if (holds(chain[i]) && !holds(chain[i + 1])) {
      throw InternalError(std::string(name(chain[i])) + " holds but " +
                          std::string(name(chain[i + 1])) + " does not");
    }
  }
}

} // namespace gtrs
