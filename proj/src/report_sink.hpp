#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "oakit/core.hpp"

namespace oakit::detail {

/// Collects entries tagged with the visit number of the node that produced
/// them; finish() orders by (node, code).
class ReportSink {
 public:
  void next_node() { ++node_; }

  void error(std::string code, std::string path, std::string message) {
    add(Severity::Error, std::move(code), std::move(path), std::move(message));
  }
  void warning(std::string code, std::string path, std::string message) {
    add(Severity::Warning, std::move(code), std::move(path), std::move(message));
  }

  ValidationReport finish() && {
    std::stable_sort(tagged_.begin(), tagged_.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second.code < b.second.code;
    });
    ValidationReport report;
    for (auto& [node, entry] : tagged_) report.entries.push_back(std::move(entry));
    return report;
  }

 private:
  void add(Severity severity, std::string code, std::string path, std::string message) {
    tagged_.emplace_back(node_, ReportEntry{severity, std::move(code), std::move(path),
                                            std::move(message)});
  }

  std::size_t node_ = 0;
  std::vector<std::pair<std::size_t, ReportEntry>> tagged_;
};

void check_selector(const Selector& selector, const std::string& path, ReportSink& sink);

}  // namespace oakit::detail
