#pragma once
// Machine- and human-readable result reports for verification runs. The JSON
// form is canonical: keys sorted, checks sorted by id, wall times omitted, so
// two runs with the same configuration are byte-identical.

#include <map>
#include <string>
#include <vector>

namespace exalg {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckRecord {
  std::string id;      // stable dotted identifier, e.g. "rr.hrr_table"
  std::string anchor;  // the verified statement, or "plumbing"
  CheckStatus status = CheckStatus::Fail;
  // conditional checks (hypothesis-gated) never affect the exit status
  bool conditional = false;
  std::string detail;  // witness on failure, skip reason, or summary data
  double wall_ms = 0.0;
};

struct Report {
  static constexpr const char* schema = "exalg-report/1";
  std::map<std::string, std::string> config;
  std::vector<CheckRecord> checks;

  void add(CheckRecord rec);
  // sorts by check id; duplicate ids are a programming error
  void finalize();

  int passed() const;
  int failed() const;   // non-conditional failures only
  int skipped() const;
  // 0 when every non-conditional check passed, 1 otherwise
  int exit_status() const;

  // canonical machine form (no wall times)
  std::string to_json() const;
  // human form, one line per check, with wall times
  std::string to_text() const;
};

}  // namespace exalg
