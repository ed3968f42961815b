#include <vector>

#include "doctest.h"

#include "gtrs/horn.hpp"

using namespace gtrs;

namespace {

// Atoms (i, j) over {0, 1, 2} encoded as 3i + j.
boost::dynamic_bitset<> closure(Discipline d, std::size_t* processed = nullptr) {
  const std::size_t n = 3;
  std::vector<std::size_t> seeds{0 * n + 1, 1 * n + 2};
  std::size_t calls = 0;
  auto schema = [&](std::size_t atom, HornSolver& s) {
    ++calls;
    std::size_t i = atom / n, j = atom % n;
    // R(i, j), R(j, k) => R(i, k) and symmetric premise position
    for (std::size_t k = 0; k < n; ++k) {
      if (s.holds(j * n + k)) s.derive(i * n + k);
      if (s.holds(k * n + i)) s.derive(k * n + j);
    }
  };
  auto out = solve(n * n, seeds, schema, d);
  if (processed) *processed = calls;
  return out;
}

} // namespace

TEST_CASE("transitive closure adds the composed pair") {
  auto facts = closure(Discipline::lifo);
  CHECK(facts.count() == 3);
  CHECK(facts.test(0 * 3 + 2));
}

TEST_CASE("each atom is processed exactly once") {
  std::size_t processed = 0;
  auto facts = closure(Discipline::fifo, &processed);
  CHECK(processed == facts.count());
}

TEST_CASE("worklist discipline does not change the fixpoint") {
  CHECK(closure(Discipline::lifo) == closure(Discipline::fifo));
}

TEST_CASE("no seeds derive nothing") {
  auto facts = solve(5, {}, [](std::size_t, HornSolver& s) { s.derive(0); });
  CHECK(facts.none());
}

TEST_CASE("derive reports duplicates") {
  HornSolver s(4);
  CHECK(s.derive(2));
  CHECK_FALSE(s.derive(2));
  s.saturate([](std::size_t) {});
  CHECK(s.processed() == 1);
}
