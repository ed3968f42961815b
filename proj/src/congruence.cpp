#include "gtrs/congruence.hpp"

#include <numeric>

namespace gtrs {

std::optional<std::uint32_t> CongruenceClosure::transition(ClassId left, ClassId right) const {
  auto it = transition_index_.find(key(left, right));
  if (it == transition_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ClassId> CongruenceClosure::const_transition(SymbolId c) const {
  auto it = const_index_.find(c);
  if (it == const_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  std::uint32_t size(std::uint32_t root) const { return size_[root]; }
  // links the root `child` below the root `parent`
  void link(std::uint32_t child, std::uint32_t parent) {
    parent_[child] = parent;
    size_[parent] += size_[child];
  }

private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

} // namespace

CongruenceClosure congruence_closure(const FlatSystem& fs) {
  const std::size_t n = fs.size();
  auto rules = fs.app_rules();
  UnionFind uf(n);
  // app rules whose argument class is the indexed root
  std::vector<std::vector<std::uint32_t>> uses(n);
  std::unordered_map<std::uint64_t, std::uint32_t> signatures;
  std::vector<std::pair<FlatId, FlatId>> pending;

  auto sig = [&](std::uint32_t i) {
    return (std::uint64_t{uf.find(rules[i].left)} << 32) | uf.find(rules[i].right);
  };
  for (std::uint32_t i = 0; i < rules.size(); ++i) {
    uses[rules[i].left].push_back(i);
    if (rules[i].right != rules[i].left) uses[rules[i].right].push_back(i);
    signatures.emplace(sig(i), i);
  }
  for (const FlatRule& r : fs.rules()) pending.emplace_back(r.lhs, r.rhs);

  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    std::uint32_t ra = uf.find(a), rb = uf.find(b);
    if (ra == rb) continue;
    if (uf.size(ra) > uf.size(rb)) std::swap(ra, rb);
    uf.link(ra, rb);
    for (std::uint32_t i : uses[ra]) {
      auto [it, fresh] = signatures.emplace(sig(i), i);
      if (!fresh) pending.emplace_back(rules[i].result, rules[it->second].result);
    }
    auto& into = uses[rb];
    into.insert(into.end(), uses[ra].begin(), uses[ra].end());
    uses[ra].clear();
    uses[ra].shrink_to_fit();
  }

  CongruenceClosure cc;
  cc.class_of_.resize(n);
  std::vector<ClassId> class_of_root(n, UINT32_MAX);
  for (FlatId p = 0; p < n; ++p) {
    std::uint32_t root = uf.find(p);
    if (class_of_root[root] == UINT32_MAX) {
      class_of_root[root] = static_cast<ClassId>(cc.members_.size());
      cc.members_.emplace_back();
    }
    cc.class_of_[p] = class_of_root[root];
    cc.members_[class_of_root[root]].push_back(p);
  }

  for (const ConstRule& r : fs.const_rules()) {
    ClassId c = cc.class_of_[r.result];
    cc.const_transitions_.push_back(ClassConstTransition{r.symbol, c});
    cc.const_index_.emplace(r.symbol, c);
  }
  cc.with_arg_.resize(cc.members_.size());
  for (std::uint32_t i = 0; i < rules.size(); ++i) {
    ClassTransition t{cc.class_of_[rules[i].left], cc.class_of_[rules[i].right],
                      cc.class_of_[rules[i].result]};
    auto [it, fresh] = cc.transition_index_.emplace(CongruenceClosure::key(t.left, t.right),
                                                     static_cast<std::uint32_t>(cc.transitions_.size()));
    if (fresh) {
      cc.transitions_.push_back(t);
      cc.sources_.emplace_back();
      cc.with_arg_[t.left].push_back(it->second);
      if (t.right != t.left) cc.with_arg_[t.right].push_back(it->second);
    }
    cc.sources_[it->second].push_back(i);
  }
  return cc;
}

MixedTerm apply_class_map(const CongruenceClosure& cc, const MixedTerm& t) {
  switch (t.kind) {
  case MixedTerm::Kind::flat:
    return MixedTerm::klass(cc.class_of(t.id));
  case MixedTerm::Kind::app:
    return MixedTerm::app(apply_class_map(cc, t.args[0]), apply_class_map(cc, t.args[1]));
  default:
    return t;
  }
}

bool convertible(const CongruenceClosure& cc, const CurriedTrs& ctrs, TermId s, TermId t) {
  const TermStore& store = ctrs.trs.store;
  const auto classes = static_cast<std::uint64_t>(cc.class_count());
  // residues: class ids below `classes`, concrete leftovers above
  std::unordered_map<std::uint64_t, std::uint64_t> leftovers;
  std::unordered_map<TermId, std::uint64_t> residue;
  auto leftover = [&](std::uint64_t tag) {
    auto [it, fresh] = leftovers.emplace(tag, classes + leftovers.size());
    return it->second;
  };
  auto eval = [&](TermId root) {
    for (TermId u : subterm_set(store, root)) {
      if (residue.count(u)) continue;
      std::uint64_t r;
      if (store.head(u) != ctrs.app) {
        auto c = cc.const_transition(store.head(u));
        // tag 0 marks a constant symbol
        r = c ? *c : leftover((std::uint64_t{index(store.head(u))} << 1));
      } else {
        std::uint64_t l = residue.at(store.args(u)[0]);
        std::uint64_t rr = residue.at(store.args(u)[1]);
        std::optional<std::uint32_t> tr;
        if (l < classes && rr < classes) {
          tr = cc.transition(static_cast<ClassId>(l), static_cast<ClassId>(rr));
        }
        if (tr) {
          r = cc.transitions()[*tr].result;
        } else {
          // pair residues stay below 2^31 each in any realistic run
          r = leftover(((l << 32) | rr) << 1 | 1);
        }
      }
      residue.emplace(u, r);
    }
    return residue.at(root);
  };
  return eval(s) == eval(t);
}

} // namespace gtrs
