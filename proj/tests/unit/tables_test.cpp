#include <fstream>
#include <sstream>

#include "doctest.h"

#include "support/tables.hpp"
#include "gtrs/cops.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in, "cannot open ", path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_tables(const char* name) {
  std::string dir = GTRS_SOURCE_DIR;
  auto a = gtrs::Analysis::create(gtrs::read_problem(dir + "/data/" + name + ".trs").trs);
  CHECK(gtrs::testing::render_tables(*a) == slurp(dir + "/tests/fixtures/" + name + ".tables"));
}

} // namespace

TEST_CASE("intermediate tables of U") { check_tables("U"); }
TEST_CASE("intermediate tables of V") { check_tables("V"); }
