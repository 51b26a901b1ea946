#include "permcf/report.hpp"

#include <algorithm>

namespace permcf {

bool CheckReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

std::optional<CheckItem> CheckReport::first_failure() const {
  for (const auto& c : items)
    if (!c.passed) return c;
  return std::nullopt;
}

void CheckReport::add(std::string label, bool passed, std::string detail) {
  items.push_back({std::move(label), passed, std::move(detail)});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& c : other.items) items.push_back({other.name + ": " + c.label, c.passed, c.detail});
}

}  // namespace permcf
