// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "gtrs/gtrs.h"

namespace {

const char u[] = "(RULES f(a) -> a, f(a) -> b, a -> a)";
const char v[] = "(RULES a -> b, a -> f(a), b -> f(f(b)), f(f(f(b))) -> b)";

gtrs_analysis* load(const char* text) {
  gtrs_analysis* a = nullptr;
  REQUIRE(gtrs_analysis_from_text(text, std::strlen(text), &a) == GTRS_OK);
  return a;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gtrs_string_free(s);
  return out;
}

} // namespace

TEST_CASE("decide through the C interface") {
  gtrs_analysis* a = load(u);
  int holds[4] = {1, 1, 1, 1};
  CHECK(gtrs_decide_all(a, holds) == GTRS_OK);
  for (int h : holds) CHECK(h == 0);

  int condition = 0;
  char *s = nullptr, *t = nullptr;
  CHECK(gtrs_witness(a, GTRS_UNC, &condition, &s, &t) == GTRS_OK);
  CHECK(condition == 1);
  std::string ss = take(s), ts = take(t);
  CHECK(((ss == "b" && ts == "f(b)") || (ss == "f(b)" && ts == "b")));

  unsigned long long size = 0;
  size_t rules = 0, subterms = 0;
  CHECK(gtrs_stats(a, &size, &rules, &subterms) == GTRS_OK);
  CHECK(size == 8);
  CHECK(rules == 3);
  CHECK(subterms == 4);
  gtrs_analysis_free(a);

  a = load(v);
  int h = 0;
  CHECK(gtrs_decide(a, GTRS_CR, &h) == GTRS_OK);
  CHECK(h == 1);
  CHECK(gtrs_witness(a, GTRS_CR, nullptr, nullptr, nullptr) == GTRS_E_STATE);
  CHECK(gtrs_witness(a, GTRS_UNR, nullptr, nullptr, nullptr) == GTRS_E_STATE);
  gtrs_analysis_free(a);
}

TEST_CASE("errors map to status codes") {
  gtrs_analysis* a = nullptr;
  const char bad[] = "(VAR x) (RULES f(x) -> a)";
  CHECK(gtrs_analysis_from_text(bad, sizeof bad - 1, &a) == GTRS_E_PARSE);
  CHECK(std::string(gtrs_last_error()) == "1:18: variable x in rule 1");
  CHECK(a == nullptr);
  CHECK(gtrs_analysis_from_file("/nonexistent/x.trs", &a) == GTRS_E_IO);
  CHECK(gtrs_analysis_from_text(nullptr, 0, &a) == GTRS_E_ARGUMENT);
  CHECK(std::string(gtrs_status_name(GTRS_E_PARSE)) == "parse error");

  a = load(u);
  int h = 0;
  CHECK(gtrs_decide(a, static_cast<gtrs_property>(9), &h) == GTRS_E_ARGUMENT);
  char* out = nullptr;
  CHECK(gtrs_report_json(a, "x", 0, 0, &out) == GTRS_E_ARGUMENT);
  CHECK(gtrs_report_json(a, "x", 0x10, 0, &out) == GTRS_E_ARGUMENT);
  gtrs_analysis_free(a);
  gtrs_analysis_free(nullptr);
}

TEST_CASE("property names") {
  gtrs_property p;
  CHECK(gtrs_parse_property("UNR", &p) == GTRS_OK);
  CHECK(p == GTRS_UNR);
  CHECK(gtrs_parse_property("wcr", &p) == GTRS_E_ARGUMENT);
  CHECK(std::string(gtrs_property_name(GTRS_NFP)) == "NFP");
}

TEST_CASE("reports") {
  gtrs_analysis* a = load(u);
  char* out = nullptr;
  REQUIRE(gtrs_report_text(a, "U.trs", 1u << GTRS_CR, 0, &out) == GTRS_OK);
  CHECK(take(out) == "CR: NO\n");
  REQUIRE(gtrs_report_json(a, "U.trs", GTRS_ALL, GTRS_REPORT_DETERMINISTIC, &out) == GTRS_OK);
  std::string json = take(out);
  CHECK(json.find("\"unc\": \"NO\"") != std::string::npos);
  CHECK(json.find("timings_ms") == std::string::npos);
  gtrs_analysis_free(a);
}

TEST_CASE("witness re-checking") {
  gtrs_analysis* a = load(u);
  int valid = 0;
  char* reason = nullptr;
  CHECK(gtrs_check_witness(a, GTRS_UNC, "b", "f(b)", &valid, &reason) == GTRS_OK);
  CHECK(valid == 1);
  CHECK(reason == nullptr);
  CHECK(gtrs_check_witness(a, GTRS_UNC, "b", "b", &valid, &reason) == GTRS_OK);
  CHECK(valid == 0);
  CHECK_FALSE(take(reason).empty());
  CHECK(gtrs_check_witness(a, GTRS_UNC, "b", "f(", &valid, nullptr) == GTRS_E_PARSE);
  gtrs_analysis_free(a);
}

TEST_CASE("handles are independent") {
  gtrs_analysis* x = load(u);
  gtrs_analysis* y = load(v);
  int hx = 1, hy = 0;
  CHECK(gtrs_decide(x, GTRS_UNC, &hx) == GTRS_OK);
  CHECK(gtrs_decide(y, GTRS_UNC, &hy) == GTRS_OK);
  CHECK(hx == 0);
  CHECK(hy == 1);
  gtrs_analysis_free(x);
  gtrs_analysis_free(y);
}
