// Command-line front end. Talks to the library through the C API only.
//
// Exit codes: 0 decided (any verdict), 1 input error, 2 internal
// inconsistency. check-witness exits 3 when the witness is rejected.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtrs/gtrs.h"

namespace {

enum Exit { decided = 0, input_error = 1, inconsistent = 2, rejected = 3 };

struct AnalysisDeleter {
  void operator()(gtrs_analysis* a) const { gtrs_analysis_free(a); }
};
using AnalysisPtr = std::unique_ptr<gtrs_analysis, AnalysisDeleter>;

struct StringDeleter {
  void operator()(char* s) const { gtrs_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_for(gtrs_status s) { return s == GTRS_E_INTERNAL ? inconsistent : input_error; }

int report_error(gtrs_status s) {
  std::cerr << "error: " << gtrs_status_name(s) << ": " << gtrs_last_error() << "\n";
  return exit_for(s);
}

bool property_mask(const std::string& name, unsigned& mask) {
  if (name == "all") {
    mask = GTRS_ALL;
    return true;
  }
  gtrs_property p;
  if (gtrs_parse_property(name.c_str(), &p) != GTRS_OK) return false;
  mask = 1u << p;
  return true;
}

struct Output {
  std::string property = "all";
  std::string format = "text";
  bool witness = false;
  bool timings = false;
  bool deterministic = false;

  unsigned flags() const {
    return (witness ? GTRS_REPORT_WITNESS : 0u) | (timings ? GTRS_REPORT_TIMINGS : 0u) |
           (deterministic ? GTRS_REPORT_DETERMINISTIC : 0u);
  }
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--property", o.property, "cr, nfp, unc, unr or all")
      ->check(CLI::IsMember({"cr", "nfp", "unc", "unr", "all"}, CLI::ignore_case));
  cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--witness", o.witness, "include witness terms for negative verdicts");
  cmd->add_flag("--timings", o.timings, "include per-phase wall-clock times");
  cmd->add_flag("--deterministic", o.deterministic, "byte-stable output, no timings");
}

int run_decide(const std::string& path, const Output& o) {
  unsigned mask = 0;
  property_mask(o.property, mask);
  gtrs_analysis* raw = nullptr;
  if (gtrs_status s = gtrs_analysis_from_file(path.c_str(), &raw); s != GTRS_OK) {
    return report_error(s);
  }
  AnalysisPtr a(raw);
  char* out = nullptr;
  std::string label = std::filesystem::path(path).filename().string();
  gtrs_status s = o.format == "json" ? gtrs_report_json(a.get(), label.c_str(), mask, o.flags(), &out)
                                     : gtrs_report_text(a.get(), label.c_str(), mask, o.flags(), &out);
  if (s != GTRS_OK) return report_error(s);
  OwnedString text(out);
  std::cout << text.get();
  if (o.format == "json") std::cout << "\n";
  return decided;
}

struct BatchRow {
  std::string file;
  gtrs_status status = GTRS_OK;
  std::string error;
  nlohmann::ordered_json report;
  double ms = 0;
};

BatchRow analyse_file(const std::filesystem::path& path, unsigned mask, unsigned flags) {
  BatchRow row;
  row.file = path.filename().string();
  auto start = std::chrono::steady_clock::now();
  gtrs_analysis* raw = nullptr;
  row.status = gtrs_analysis_from_file(path.string().c_str(), &raw);
  if (row.status != GTRS_OK) {
    row.error = gtrs_last_error();
    return row;
  }
  AnalysisPtr a(raw);
  char* out = nullptr;
  row.status = gtrs_report_json(a.get(), row.file.c_str(), mask, flags, &out);
  if (row.status != GTRS_OK) {
    row.error = gtrs_last_error();
    return row;
  }
  OwnedString text(out);
  row.report = nlohmann::ordered_json::parse(text.get());
  std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
  row.ms = d.count();
  return row;
}

std::string status_label(gtrs_status s) {
  return s == GTRS_E_PARSE ? "parse error" : gtrs_status_name(s);
}

int run_batch(const std::string& dir, const Output& o, unsigned jobs) {
  namespace fs = std::filesystem;
  unsigned mask = 0;
  property_mask(o.property, mask);
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "error: cannot read directory " << dir << "\n";
    return input_error;
  }
  std::vector<fs::path> files;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".trs") files.push_back(it->path());
  }
  if (ec) {
    std::cerr << "error: cannot read directory " << dir << ": " << ec.message() << "\n";
    return input_error;
  }
  std::sort(files.begin(), files.end());

  std::vector<BatchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      rows[i] = analyse_file(files[i], mask, o.flags());
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(files.size())));
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t ok = 0, failed = 0;
  bool internal = false;
  nlohmann::ordered_json yes = nlohmann::ordered_json::object();
  for (const BatchRow& r : rows) {
    if (r.status != GTRS_OK) {
      ++failed;
      internal |= r.status == GTRS_E_INTERNAL;
      continue;
    }
    ++ok;
    for (auto& [k, v] : r.report["verdicts"].items()) {
      int prev = yes.contains(k) ? yes[k].get<int>() : 0;
      yes[k] = prev + (v == "YES" ? 1 : 0);
    }
  }

  if (o.format == "json") {
    nlohmann::ordered_json j;
    auto& list = j["files"] = nlohmann::ordered_json::array();
    for (const BatchRow& r : rows) {
      if (r.status == GTRS_OK) {
        list.push_back(r.report);
      } else {
        list.push_back({{"file", r.file}, {"error", status_label(r.status)}, {"message", r.error}});
      }
    }
    j["summary"] = {{"files", rows.size()}, {"decided", ok}, {"failed", failed}, {"yes", yes}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t width = 4;
    for (const BatchRow& r : rows) width = std::max(width, r.file.size());
    std::printf("%-*s  %-4s %-4s %-4s %s\n", static_cast<int>(width), "file", "CR", "NFP",
                "UNC", o.deterministic ? "UNR" : "UNR   ms");
    for (const BatchRow& r : rows) {
      if (r.status != GTRS_OK) {
        std::printf("%-*s  %s: %s\n", static_cast<int>(width), r.file.c_str(),
                    status_label(r.status).c_str(), r.error.c_str());
        continue;
      }
      const auto& v = r.report["verdicts"];
      auto cell = [&](const char* k) { return v.contains(k) ? v[k].get<std::string>() : "-"; };
      std::printf("%-*s  %-4s %-4s %-4s ", static_cast<int>(width), r.file.c_str(),
                  cell("cr").c_str(), cell("nfp").c_str(), cell("unc").c_str());
      if (o.deterministic) {
        std::printf("%s", cell("unr").c_str());
      } else {
        std::printf("%-4s  %.3f", cell("unr").c_str(), r.ms);
      }
      std::printf("\n");
    }
    std::printf("%zu files, %zu decided, %zu failed\n", rows.size(), ok, failed);
  }
  std::fflush(stdout);
  return internal ? inconsistent : decided;
}

int run_check_witness(const std::string& path, const std::string& property, const std::string& s,
                      const std::string& t) {
  gtrs_property p;
  if (gtrs_parse_property(property.c_str(), &p) != GTRS_OK) {
    std::cerr << "error: unknown property " << property << "\n";
    return input_error;
  }
  gtrs_analysis* raw = nullptr;
  if (gtrs_status st = gtrs_analysis_from_file(path.c_str(), &raw); st != GTRS_OK) {
    return report_error(st);
  }
  AnalysisPtr a(raw);
  int valid = 0;
  char* reason = nullptr;
  if (gtrs_status st = gtrs_check_witness(a.get(), p, s.c_str(), t.c_str(), &valid, &reason);
      st != GTRS_OK) {
    return report_error(st);
  }
  OwnedString why(reason);
  if (valid) {
    std::cout << "valid " << gtrs_property_name(p) << " witness\n";
    return decided;
  }
  std::cout << "rejected: " << why.get() << "\n";
  return rejected;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides CR, NFP, UNC and UNR of finite ground term rewrite systems."};
  app.require_subcommand(1);

  Output decide_out;
  std::string decide_file;
  auto* decide = app.add_subcommand("decide", "decide properties of one .trs file");
  add_output_flags(decide, decide_out);
  decide->add_option("file", decide_file, "COPS problem file")->required();

  Output batch_out;
  std::string batch_dir;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* batch = app.add_subcommand("batch", "decide every .trs file in a directory");
  add_output_flags(batch, batch_out);
  batch->add_option("--jobs,-j", jobs, "parallel workers")->check(CLI::PositiveNumber);
  batch->add_option("dir", batch_dir, "directory of .trs files")->required();

  std::string cw_file, cw_property, cw_s, cw_t;
  auto* check = app.add_subcommand("check-witness", "re-check a claimed counterexample");
  check->add_option("--property", cw_property, "cr, nfp, unc or unr")->required();
  check->add_option("file", cw_file, "COPS problem file")->required();
  check->add_option("s", cw_s, "first term")->required();
  check->add_option("t", cw_t, "second term")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : input_error;
  }

  if (*decide) return run_decide(decide_file, decide_out);
  if (*batch) return run_batch(batch_dir, batch_out, jobs);
  return run_check_witness(cw_file, cw_property, cw_s, cw_t);
}
