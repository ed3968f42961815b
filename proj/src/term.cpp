#include "gtrs/term.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace gtrs {

SymbolId TermStore::symbol(std::string_view name, unsigned arity) {
  auto it = symbol_index_.find(std::string(name));
  if (it != symbol_index_.end()) {
    const Symbol& sym = symbols_[index(it->second)];
    if (sym.arity != arity) {
      throw StructuralError("symbol '" + sym.name + "' used with arity " + std::to_string(arity) +
                            " but declared with arity " + std::to_string(sym.arity));
    }
    return it->second;
  }
  SymbolId id{static_cast<std::uint32_t>(symbols_.size())};
  symbols_.push_back(Symbol{std::string(name), arity});
  symbol_index_.emplace(std::string(name), id);
  return id;
}

const SymbolId* TermStore::find_symbol(std::string_view name) const {
  auto it = symbol_index_.find(std::string(name));
  return it == symbol_index_.end() ? nullptr : &it->second;
}

std::size_t TermStore::key_hash(SymbolId head, std::span<const TermId> children) {
  std::size_t h = index(head) * 0x9E3779B97F4A7C15ull;
  for (TermId c : children) {
    h ^= index(c) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

const TermId* TermStore::find(SymbolId head, std::span<const TermId> children) const {
  auto [lo, hi] = intern_.equal_range(key_hash(head, children));
  for (auto it = lo; it != hi; ++it) {
    const Node& n = nodes_[index(it->second)];
    if (n.head == head && n.arity == children.size() &&
        std::equal(children.begin(), children.end(), children_.begin() + n.first_child)) {
      return &it->second;
    }
  }
  return nullptr;
}

TermId TermStore::make(SymbolId head, std::span<const TermId> children) {
  if (index(head) >= symbols_.size()) {
    throw StructuralError("unknown symbol id " + std::to_string(index(head)));
  }
  const Symbol& sym = symbols_[index(head)];
  if (children.size() != sym.arity) {
    throw StructuralError("symbol '" + sym.name + "' has arity " + std::to_string(sym.arity) +
                          " but was applied to " + std::to_string(children.size()) +
                          " arguments");
  }
  for (TermId c : children) {
    if (!valid(c)) throw StructuralError("invalid child term id " + std::to_string(index(c)));
  }
  if (const TermId* existing = find(head, children)) return *existing;

  TermId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(Node{head, static_cast<std::uint32_t>(children_.size()),
                        static_cast<std::uint32_t>(children.size())});
  children_.insert(children_.end(), children.begin(), children.end());
  intern_.emplace(key_hash(head, children), id);
  return id;
}

namespace {

void collect_post_order(const TermStore& store, TermId root, std::unordered_set<TermId>& seen,
                        std::vector<TermId>& out) {
  if (seen.count(root)) return;
  // explicit stack: witness terms can be deep
  std::vector<std::pair<TermId, std::size_t>> stack{{root, 0}};
  seen.insert(root);
  while (!stack.empty()) {
    auto& [t, next] = stack.back();
    auto args = store.args(t);
    if (next < args.size()) {
      TermId c = args[next++];
      if (seen.insert(c).second) stack.emplace_back(c, 0);
      continue;
    }
    out.push_back(t);
    stack.pop_back();
  }
}

} // namespace

std::vector<TermId> subterm_set(const TermStore& store, TermId t) {
  std::unordered_set<TermId> seen;
  std::vector<TermId> out;
  collect_post_order(store, t, seen, out);
  return out;
}

std::vector<TermId> subterm_set(const Trs& trs) {
  std::unordered_set<TermId> seen;
  std::vector<TermId> out;
  for (const Rule& r : trs.rules) {
    collect_post_order(trs.store, r.lhs, seen, out);
    collect_post_order(trs.store, r.rhs, seen, out);
  }
  return out;
}

std::uint64_t term_size(const TermStore& store, TermId t) {
  constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::unordered_map<TermId, std::uint64_t> size;
  for (TermId s : subterm_set(store, t)) {
    std::uint64_t n = 1;
    for (TermId c : store.args(s)) {
      std::uint64_t k = size.at(c);
      n = (cap - n < k) ? cap : n + k;
    }
    size.emplace(s, n);
  }
  return size.at(t);
}

std::uint64_t total_size(const Trs& trs) {
  std::uint64_t n = 0;
  for (const Rule& r : trs.rules) n += term_size(trs.store, r.lhs) + term_size(trs.store, r.rhs);
  return n;
}

std::string to_string(const TermStore& store, TermId t) {
  std::string out;
  // (term, next child index)
  std::vector<std::pair<TermId, std::size_t>> stack{{t, 0}};
  while (!stack.empty()) {
    auto& [s, next] = stack.back();
    auto args = store.args(s);
    if (next == 0) {
      out += store.name(store.head(s));
      if (args.empty()) {
        stack.pop_back();
        continue;
      }
      out += '(';
    } else if (next < args.size()) {
      out += ',';
    }
    if (next < args.size()) {
      TermId c = args[next++];
      stack.emplace_back(c, 0);
    } else {
      out += ')';
      stack.pop_back();
    }
  }
  return out;
}

} // namespace gtrs
