#include "gtrs/horn.hpp"

namespace gtrs {

boost::dynamic_bitset<> solve(std::size_t universe, std::span<const std::size_t> seeds,
                              const std::function<void(std::size_t, HornSolver&)>& schema,
                              Discipline discipline) {
  HornSolver solver(universe, discipline);
  for (std::size_t s : seeds) solver.derive(s);
  solver.saturate([&](std::size_t atom) { schema(atom, solver); });
  return solver.facts();
}

} // namespace gtrs
