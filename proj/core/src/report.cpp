#include "qmac/report.hpp"

#include <algorithm>

namespace qmac {

void Report::merge(const Report& other) {
  for (const auto& item : other.items_) items_.push_back({other.name_ + "/" + item.label, item.passed, item.detail});
}

bool Report::passed() const {
  return std::all_of(items_.begin(), items_.end(), [](const CheckItem& i) { return i.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(items_.begin(), items_.end(), [](const CheckItem& i) { return !i.passed; }));
}

Json Report::to_json() const {
  Json items = Json::array();
  for (const auto& i : items_) items.push_back(Json{{"label", i.label}, {"passed", i.passed}, {"detail", i.detail}});
  return Json{{"report", name_}, {"parameters", parameters_}, {"passed", passed()}, {"items", std::move(items)}};
}

std::vector<std::string> Report::to_json_lines() const {
  std::vector<std::string> lines;
  lines.reserve(items_.size() + 1);
  for (const auto& i : items_) {
    lines.push_back(Json{{"report", name_}, {"label", i.label}, {"passed", i.passed}, {"detail", i.detail}}.dump());
  }
  lines.push_back(Json{{"report", name_},
                       {"summary", true},
                       {"parameters", parameters_},
                       {"checks", items_.size()},
                       {"failures", failures()},
                       {"passed", passed()}}
                      .dump());
  return lines;
}

}  // namespace qmac
