#include "gtrs/report.hpp"

#include <cctype>
#include <cstdio>

namespace gtrs {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

} // namespace

FileReport run_report(Analysis& a, const std::string& file, const ReportOptions& options) {
  FileReport r;
  r.file = file;
  r.stats = a.stats();
  if (options.properties.size() == all_properties.size()) {
    std::array<Verdict, 4> all;
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = a.decide(options.properties[i]);
    check_implication_chain(all);
    r.verdicts.assign(all.begin(), all.end());
  } else {
    for (Property p : options.properties) r.verdicts.push_back(a.decide(p));
  }
  return r;
}

nlohmann::ordered_json to_json(Analysis& a, const FileReport& r, const ReportOptions& options) {
  nlohmann::ordered_json j;
  j["file"] = r.file;
  j["size"] = {{"total", r.stats.total_size},
               {"rules", r.stats.rule_count},
               {"subterms", r.stats.subterm_count}};
  auto& verdicts = j["verdicts"] = nlohmann::ordered_json::object();
  for (const Verdict& v : r.verdicts) verdicts[lower(name(v.property))] = v.holds ? "YES" : "NO";
  if (options.witness) {
    auto& ws = j["witnesses"] = nlohmann::ordered_json::object();
    for (const Verdict& v : r.verdicts) {
      if (!v.witness) continue;
      nlohmann::ordered_json w;
      w["condition"] = v.witness->condition;
      w["s"] = a.display(v.witness->s);
      w["t"] = a.display(v.witness->t);
      w["s_curried"] = display_curried(a.curried(), v.witness->s);
      w["t_curried"] = display_curried(a.curried(), v.witness->t);
      ws[lower(name(v.property))] = std::move(w);
    }
  }
  if (options.timings && !options.deterministic) {
    auto& t = j["timings_ms"] = nlohmann::ordered_json::object();
    for (const PhaseTiming& p : a.timings()) t[p.phase] = p.ms;
  }
  return j;
}

std::string to_text(Analysis& a, const FileReport& r, const ReportOptions& options) {
  std::string out;
  for (const Verdict& v : r.verdicts) {
    out += std::string(name(v.property)) + ": " + (v.holds ? "YES" : "NO") + "\n";
    if (options.witness && v.witness) {
      out += "  witness (condition " + std::to_string(v.witness->condition) +
             "): s = " + a.display(v.witness->s) + "; t = " + a.display(v.witness->t) + "\n";
    }
  }
  if (options.timings && !options.deterministic) {
    for (const PhaseTiming& p : a.timings()) out += "  " + p.phase + " " + format_ms(p.ms) + " ms\n";
  }
  return out;
}

} // namespace gtrs
