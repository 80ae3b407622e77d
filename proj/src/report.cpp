#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace exalg {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skipped";
  }
  return "?";
}

}  // namespace

void Report::add(CheckRecord rec) { checks.push_back(std::move(rec)); }

void Report::finalize() {
  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < checks.size(); ++i)
    if (checks[i].id == checks[i - 1].id)
      throw std::logic_error("duplicate check id: " + checks[i].id);
}

int Report::passed() const {
  int n = 0;
  for (auto& c : checks) n += c.status == CheckStatus::Pass;
  return n;
}

int Report::failed() const {
  int n = 0;
  for (auto& c : checks) n += c.status == CheckStatus::Fail && !c.conditional;
  return n;
}

int Report::skipped() const {
  int n = 0;
  for (auto& c : checks) n += c.status == CheckStatus::Skip;
  return n;
}

int Report::exit_status() const { return failed() == 0 ? 0 : 1; }

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema"] = schema;
  j["config"] = config;  // std::map keeps keys sorted
  j["summary"] = {{"passed", passed()},
                  {"failed", failed()},
                  {"skipped", skipped()},
                  {"exit_status", exit_status()}};
  nlohmann::json arr = nlohmann::json::array();
  for (auto& c : checks) {
    nlohmann::json rec;
    rec["id"] = c.id;
    rec["anchor"] = c.anchor;
    rec["status"] = status_name(c.status);
    rec["conditional"] = c.conditional;
    rec["detail"] = c.detail;
    arr.push_back(std::move(rec));
  }
  j["checks"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  for (auto& [k, v] : config) out += k + "=" + v + " ";
  if (!config.empty()) out += "\n";
  char line[512];
  for (auto& c : checks) {
    std::snprintf(line, sizeof line, "%-34s %-7s %8.1f ms  %s\n", c.id.c_str(),
                  status_name(c.status), c.wall_ms,
                  c.detail.empty() ? c.anchor.c_str() : c.detail.c_str());
    out += line;
  }
  std::snprintf(line, sizeof line, "%d passed, %d failed, %d skipped\n",
                passed(), failed(), skipped());
  out += line;
  return out;
}

}  // namespace exalg
