#include "gtrs/preprocess.hpp"

#include <algorithm>
#include <functional>

namespace gtrs {

TermId curry_term(const TermStore& source, TermId t, CurriedTrs& ctrs) {
  TermStore& store = ctrs.trs.store;
  std::unordered_map<TermId, TermId> memo;
  for (TermId s : subterm_set(source, t)) {
    const Symbol& sym = source.info(source.head(s));
    if (sym.name == app_symbol_name) {
      throw StructuralError("symbol name '" + sym.name + "' is reserved");
    }
    SymbolId c = store.symbol(sym.name, 0);
    auto [it, fresh] = ctrs.source_arity.emplace(c, sym.arity);
    if (!fresh && it->second != sym.arity) {
      throw StructuralError("symbol '" + sym.name + "' used with arity " +
                            std::to_string(sym.arity) + " but declared with arity " +
                            std::to_string(it->second));
    }
    TermId result = store.make(c, {});
    for (TermId arg : source.args(s)) result = store.make(ctrs.app, {result, memo.at(arg)});
    memo.emplace(s, result);
  }
  return memo.at(t);
}

CurriedTrs curry(const Trs& trs) {
  CurriedTrs out;
  out.app = out.trs.store.symbol(app_symbol_name, 2);
  for (const Rule& r : trs.rules) {
    TermId lhs = curry_term(trs.store, r.lhs, out);
    TermId rhs = curry_term(trs.store, r.rhs, out);
    out.trs.rules.push_back(Rule{lhs, rhs});
  }
  return out;
}

namespace {

// Splits h ∘ a1 ∘ ... ∘ an into h and [a1..an]. Returns false if the spine
// head is not a constant.
bool spine(const CurriedTrs& ctrs, TermId t, SymbolId& head, std::vector<TermId>& args) {
  const TermStore& store = ctrs.trs.store;
  args.clear();
  while (store.head(t) == ctrs.app) {
    args.push_back(store.args(t)[1]);
    t = store.args(t)[0];
  }
  std::reverse(args.begin(), args.end());
  head = store.head(t);
  return store.args(t).empty();
}

} // namespace

std::optional<TermId> uncurry(const CurriedTrs& ctrs, TermId t, TermStore& out) {
  std::unordered_map<TermId, std::optional<TermId>> memo;
  std::function<std::optional<TermId>(TermId)> go = [&](TermId u) -> std::optional<TermId> {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    SymbolId head;
    std::vector<TermId> args;
    std::optional<TermId> result;
    if (spine(ctrs, u, head, args) && ctrs.arity_of(head) == args.size()) {
      std::vector<TermId> kids;
      kids.reserve(args.size());
      bool ok = true;
      for (TermId a : args) {
        auto k = go(a);
        if (!k) {
          ok = false;
          break;
        }
        kids.push_back(*k);
      }
      if (ok) {
        SymbolId f = out.symbol(ctrs.trs.store.name(head), static_cast<unsigned>(args.size()));
        result = out.make(f, kids);
      }
    }
    memo.emplace(u, result);
    return result;
  };
  return go(t);
}

std::string display_curried(const CurriedTrs& ctrs, TermId t) {
  const TermStore& store = ctrs.trs.store;
  std::function<void(TermId, std::string&)> go = [&](TermId u, std::string& out) {
    if (store.head(u) != ctrs.app) {
      out += store.name(store.head(u));
      return;
    }
    go(store.args(u)[0], out);
    out += app_symbol_name;
    TermId right = store.args(u)[1];
    if (store.head(right) == ctrs.app) {
      out += '(';
      go(right, out);
      out += ')';
    } else {
      go(right, out);
    }
  };
  std::string out;
  go(t, out);
  return out;
}

std::string display(const CurriedTrs& ctrs, TermId t) {
  TermStore scratch;
  if (auto u = uncurry(ctrs, t, scratch)) return to_string(scratch, *u);
  return display_curried(ctrs, t);
}

std::optional<FlatId> FlatSystem::app(FlatId left, FlatId right) const {
  auto it = app_index_.find(key(left, right));
  if (it == app_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<FlatId> FlatSystem::constant(SymbolId c) const {
  auto it = const_index_.find(c);
  if (it == const_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<FlatId> FlatSystem::find(TermId t) const {
  auto it = term_index_.find(t);
  if (it == term_index_.end()) return std::nullopt;
  return it->second;
}

FlatSystem flatten(const CurriedTrs& ctrs, std::span<const TermId> extra) {
  const TermStore& store = ctrs.trs.store;
  FlatSystem fs;

  auto name_all = [&](TermId root) {
    for (TermId s : subterm_set(store, root)) {
      if (fs.term_index_.count(s)) continue;
      auto p = static_cast<FlatId>(fs.subterm_.size());
      fs.subterm_.push_back(s);
      fs.term_index_.emplace(s, p);
      auto args = store.args(s);
      if (args.empty()) {
        fs.defining_const_.push_back(true);
        fs.definition_.push_back(static_cast<std::uint32_t>(fs.const_rules_.size()));
        fs.const_rules_.push_back(ConstRule{store.head(s), p});
        fs.const_index_.emplace(store.head(s), p);
      } else {
        if (store.head(s) != ctrs.app || args.size() != 2) {
          throw StructuralError("flatten expects a curried term");
        }
        AppRule rule{fs.term_index_.at(args[0]), fs.term_index_.at(args[1]), p};
        fs.defining_const_.push_back(false);
        fs.definition_.push_back(static_cast<std::uint32_t>(fs.app_rules_.size()));
        fs.app_index_.emplace(FlatSystem::key(rule.left, rule.right), p);
        fs.app_rules_.push_back(rule);
      }
    }
  };

  for (const Rule& r : ctrs.trs.rules) {
    name_all(r.lhs);
    name_all(r.rhs);
  }
  for (TermId t : extra) name_all(t);

  for (const Rule& r : ctrs.trs.rules) {
    fs.rules_.push_back(FlatRule{fs.term_index_.at(r.lhs), fs.term_index_.at(r.rhs)});
  }

  std::size_t n = fs.subterm_.size();
  fs.with_left_.resize(n);
  fs.with_right_.resize(n);
  fs.with_arg_.resize(n);
  for (std::uint32_t i = 0; i < fs.app_rules_.size(); ++i) {
    const AppRule& r = fs.app_rules_[i];
    fs.with_left_[r.left].push_back(i);
    fs.with_right_[r.right].push_back(i);
    fs.with_arg_[r.left].push_back(i);
    if (r.right != r.left) fs.with_arg_[r.right].push_back(i);
  }
  return fs;
}

} // namespace gtrs
