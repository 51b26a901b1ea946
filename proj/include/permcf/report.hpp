#pragma once

// Outcome of a bounded verification: one line per checked item.

#include <optional>
#include <string>
#include <vector>

namespace permcf {

struct CheckItem {
  std::string label;
  bool passed = true;
  std::string detail;  // on failure: what differed, with both values
};

struct CheckReport {
  std::string name;
  std::vector<CheckItem> items;

  bool ok() const;
  std::optional<CheckItem> first_failure() const;
  void add(std::string label, bool passed, std::string detail = {});
  /// Appends another report's items with its name as prefix.
  void merge(const CheckReport& other);
};

}  // namespace permcf
