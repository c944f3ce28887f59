#include "finsite/report.hpp"

#include <sstream>

namespace finsite {

void RunReport::add_check(const std::string& name, bool pass, json details) {
  checks_.push_back({name, pass, std::move(details)});
}

void RunReport::absorb(const RunReport& other) {
  for (const Check& c : other.checks_)
    checks_.push_back({other.command_ + "/" + c.name, c.pass, c.details});
}

bool RunReport::ok() const {
  for (const Check& c : checks_)
    if (!c.pass) return false;
  return true;
}

int RunReport::passed() const {
  int n = 0;
  for (const Check& c : checks_)
    if (c.pass) ++n;
  return n;
}

RunReport::json RunReport::to_json() const {
  json j;
  j["v"] = 1;
  j["command"] = command_;
  j["parameters"] = parameters_;
  j["payload"] = payload_;
  json checks = json::array();
  for (const Check& c : checks_) {
    json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["details"] = c.details;
    checks.push_back(std::move(entry));
  }
  j["checks"] = checks;
  json summary;
  summary["total"] = total();
  summary["passed"] = passed();
  summary["ok"] = ok();
  j["summary"] = summary;
  return j;
}

std::string RunReport::to_text(std::optional<double> seconds) const {
  std::ostringstream out;
  out << "command: " << command_ << "\n";
  if (!parameters_.empty()) out << "parameters: " << parameters_.dump() << "\n";
  for (const auto& [key, value] : payload_.items())
    out << key << ": " << value.dump() << "\n";
  for (const Check& c : checks_) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.pass && !c.details.empty()) out << "  " << c.details.dump();
    out << "\n";
  }
  out << "summary: " << passed() << "/" << total() << " checks passed, "
      << (ok() ? "ok" : "FAILED") << "\n";
  if (seconds) {
    std::ostringstream ms;
    ms << static_cast<long long>(*seconds * 1000.0);
    out << "duration: " << ms.str() << " ms\n";
  }
  return out.str();
}

}  // namespace finsite
