#include "gtrs/gtrs.h"

#include <array>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "gtrs/analysis.hpp"
#include "gtrs/cops.hpp"
#include "gtrs/oracle.hpp"
#include "gtrs/report.hpp"

struct gtrs_analysis {
  std::unique_ptr<gtrs::Analysis> analysis;
  std::array<std::optional<gtrs::Verdict>, 4> verdicts;
};

namespace {

thread_local std::string last_error;

gtrs_status fail(gtrs_status s, const char* what) {
  last_error = what;
  return s;
}

template <class F> gtrs_status guarded(F&& f) noexcept {
  try {
    last_error.clear();
    return f();
  } catch (const gtrs::IoError& e) {
    return fail(GTRS_E_IO, e.what());
  } catch (const gtrs::ParseError& e) {
    return fail(GTRS_E_PARSE, e.what());
  } catch (const gtrs::StructuralError& e) {
    return fail(GTRS_E_PARSE, e.what());
  } catch (const gtrs::InternalError& e) {
    return fail(GTRS_E_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GTRS_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GTRS_E_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_property(gtrs_property p) { return p >= GTRS_CR && p <= GTRS_UNR; }

gtrs::Property to_property(gtrs_property p) { return static_cast<gtrs::Property>(p); }

const gtrs::Verdict& verdict(gtrs_analysis* a, gtrs_property p) {
  auto& slot = a->verdicts[p];
  if (!slot) slot = a->analysis->decide(to_property(p));
  return *slot;
}

gtrs::ReportOptions options_from(unsigned properties, unsigned flags) {
  gtrs::ReportOptions o;
  o.properties.clear();
  for (gtrs::Property p : gtrs::all_properties) {
    if (properties & (1u << static_cast<unsigned>(p))) o.properties.push_back(p);
  }
  o.witness = flags & GTRS_REPORT_WITNESS;
  o.timings = flags & GTRS_REPORT_TIMINGS;
  o.deterministic = flags & GTRS_REPORT_DETERMINISTIC;
  return o;
}

template <class Render>
gtrs_status report(gtrs_analysis* a, const char* label, unsigned properties, unsigned flags,
                   char** out, Render&& render) {
  if (!a || !out) return fail(GTRS_E_ARGUMENT, "null argument");
  if ((properties & GTRS_ALL) == 0 || (properties & ~GTRS_ALL) != 0) {
    return fail(GTRS_E_ARGUMENT, "no valid property selected");
  }
  return guarded([&] {
    auto options = options_from(properties, flags);
    auto r = gtrs::run_report(*a->analysis, label ? label : "", options);
    for (const gtrs::Verdict& v : r.verdicts) a->verdicts[static_cast<std::size_t>(v.property)] = v;
    *out = copy_string(render(*a->analysis, r, options));
    return GTRS_OK;
  });
}

} // namespace

extern "C" {

const char* gtrs_last_error(void) { return last_error.c_str(); }

const char* gtrs_status_name(gtrs_status s) {
  switch (s) {
  case GTRS_OK: return "ok";
  case GTRS_E_ARGUMENT: return "invalid argument";
  case GTRS_E_IO: return "i/o error";
  case GTRS_E_PARSE: return "parse error";
  case GTRS_E_INTERNAL: return "internal inconsistency";
  case GTRS_E_STATE: return "invalid state";
  }
  return "unknown status";
}

void gtrs_string_free(char* s) { std::free(s); }

gtrs_status gtrs_parse_property(const char* name, gtrs_property* out) {
  if (!name || !out) return fail(GTRS_E_ARGUMENT, "null argument");
  auto p = gtrs::parse_property(name);
  if (!p) return fail(GTRS_E_ARGUMENT, (std::string("unknown property ") + name).c_str());
  *out = static_cast<gtrs_property>(*p);
  return GTRS_OK;
}

const char* gtrs_property_name(gtrs_property p) {
  if (!valid_property(p)) return "?";
  return gtrs::name(to_property(p)).data();
}

gtrs_status gtrs_analysis_from_text(const char* text, size_t length, gtrs_analysis** out) {
  if (!text || !out) return fail(GTRS_E_ARGUMENT, "null argument");
  return guarded([&] {
    auto a = std::make_unique<gtrs_analysis>();
    a->analysis = gtrs::Analysis::create(gtrs::parse_trs(std::string_view(text, length)));
    *out = a.release();
    return GTRS_OK;
  });
}

gtrs_status gtrs_analysis_from_file(const char* path, gtrs_analysis** out) {
  if (!path || !out) return fail(GTRS_E_ARGUMENT, "null argument");
  return guarded([&] {
    auto a = std::make_unique<gtrs_analysis>();
    a->analysis = gtrs::Analysis::create(gtrs::read_problem(path).trs);
    *out = a.release();
    return GTRS_OK;
  });
}

void gtrs_analysis_free(gtrs_analysis* a) { delete a; }

gtrs_status gtrs_stats(const gtrs_analysis* a, unsigned long long* total_size, size_t* rules,
                       size_t* subterms) {
  if (!a) return fail(GTRS_E_ARGUMENT, "null argument");
  auto s = a->analysis->stats();
  if (total_size) *total_size = s.total_size;
  if (rules) *rules = s.rule_count;
  if (subterms) *subterms = s.subterm_count;
  return GTRS_OK;
}

gtrs_status gtrs_decide(gtrs_analysis* a, gtrs_property p, int* holds) {
  if (!a || !holds) return fail(GTRS_E_ARGUMENT, "null argument");
  if (!valid_property(p)) return fail(GTRS_E_ARGUMENT, "unknown property");
  return guarded([&] {
    *holds = verdict(a, p).holds ? 1 : 0;
    return GTRS_OK;
  });
}

gtrs_status gtrs_decide_all(gtrs_analysis* a, int holds[4]) {
  if (!a || !holds) return fail(GTRS_E_ARGUMENT, "null argument");
  return guarded([&] {
    std::array<gtrs::Verdict, 4> all;
    for (int p = GTRS_CR; p <= GTRS_UNR; ++p) all[p] = verdict(a, static_cast<gtrs_property>(p));
    gtrs::check_implication_chain(all);
    for (int p = GTRS_CR; p <= GTRS_UNR; ++p) holds[p] = all[p].holds ? 1 : 0;
    return GTRS_OK;
  });
}

gtrs_status gtrs_witness(gtrs_analysis* a, gtrs_property p, int* condition, char** s, char** t) {
  if (!a) return fail(GTRS_E_ARGUMENT, "null argument");
  if (!valid_property(p)) return fail(GTRS_E_ARGUMENT, "unknown property");
  const auto& slot = a->verdicts[p];
  if (!slot) return fail(GTRS_E_STATE, "property not decided yet");
  if (!slot->witness) return fail(GTRS_E_STATE, "property holds, no witness");
  return guarded([&] {
    const gtrs::Witness& w = *slot->witness;
    std::string ss = a->analysis->display(w.s), ts = a->analysis->display(w.t);
    if (condition) *condition = w.condition;
    if (s) *s = copy_string(ss);
    if (t) *t = copy_string(ts);
    return GTRS_OK;
  });
}

gtrs_status gtrs_report_json(gtrs_analysis* a, const char* label, unsigned properties,
                             unsigned flags, char** out) {
  return report(a, label, properties, flags, out,
                [](gtrs::Analysis& an, const gtrs::FileReport& r, const gtrs::ReportOptions& o) {
                  return gtrs::to_json(an, r, o).dump(2);
                });
}

gtrs_status gtrs_report_text(gtrs_analysis* a, const char* label, unsigned properties,
                             unsigned flags, char** out) {
  return report(a, label, properties, flags, out, gtrs::to_text);
}

gtrs_status gtrs_check_witness(gtrs_analysis* a, gtrs_property p, const char* s, const char* t,
                               int* valid, char** reason) {
  if (!a || !s || !t || !valid) return fail(GTRS_E_ARGUMENT, "null argument");
  if (!valid_property(p)) return fail(GTRS_E_ARGUMENT, "unknown property");
  return guarded([&] {
    gtrs::CurriedTrs& ctrs = a->analysis->curried();
    gtrs::Verdict v;
    v.property = to_property(p);
    v.holds = false;
    v.witness = gtrs::Witness{0, gtrs::parse_curried_term(s, ctrs),
                              gtrs::parse_curried_term(t, ctrs), 0, {}};
    auto check = gtrs::oracle::verify_witness(ctrs, v);
    *valid = check.ok ? 1 : 0;
    if (reason) *reason = check.ok ? nullptr : copy_string(check.reason);
    return GTRS_OK;
  });
}

} // extern "C"
