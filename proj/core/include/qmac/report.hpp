// Pass/fail reports produced by the identity and congruence checkers.
#pragma once

#include "qmac/json.hpp"

#include <string>
#include <vector>

namespace qmac {

struct CheckItem {
  std::string label;
  bool passed = false;
  Json detail;
};

class Report {
 public:
  explicit Report(std::string name, Json parameters = Json::object())
      : name_(std::move(name)), parameters_(std::move(parameters)) {}

  void add(std::string label, bool passed, Json detail = Json::object()) {
    items_.push_back({std::move(label), passed, std::move(detail)});
  }
  /// Appends every item of another report, prefixing labels with its name.
  void merge(const Report& other);

  const std::string& name() const { return name_; }
  const Json& parameters() const { return parameters_; }
  const std::vector<CheckItem>& items() const { return items_; }
  bool passed() const;
  std::size_t failures() const;

  Json to_json() const;
  /// One JSON object per item followed by a summary line.
  std::vector<std::string> to_json_lines() const;

 private:
  std::string name_;
  Json parameters_;
  std::vector<CheckItem> items_;
};

}  // namespace qmac
