#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace finsite {

// Machine-readable run record: a named command, an optional structured
// payload, and a list of named pass/fail checks.  JSON output is byte-stable
// for identical inputs; wall-clock durations appear only in the text format.
class RunReport {
public:
  using json = nlohmann::ordered_json;

  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void set_parameter(const std::string& key, json value) { parameters_[key] = std::move(value); }
  void set_payload(const std::string& key, json value) { payload_[key] = std::move(value); }
  void add_check(const std::string& name, bool pass, json details = json::object());
  // Fold another report in as a namespaced block of checks.
  void absorb(const RunReport& other);

  bool ok() const;
  int total() const { return static_cast<int>(checks_.size()); }
  int passed() const;
  const std::string& command() const { return command_; }

  json to_json() const;
  std::string to_text(std::optional<double> seconds) const;

private:
  struct Check {
    std::string name;
    bool pass = false;
    json details;
  };

  std::string command_;
  json parameters_ = json::object();
  json payload_ = json::object();
  std::vector<Check> checks_;
};

}  // namespace finsite
