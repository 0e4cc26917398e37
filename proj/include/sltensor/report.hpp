#pragma once

#include "sltensor/tensor_module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sltensor {

inline constexpr const char* kReportVersion = "1.0";

struct CheckRecord {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;  // in emission order
  Status status = Status::pass;
  std::optional<std::string> witness;  // always present when status is fail
  std::int64_t runtime_ms = 0;
};

enum class ReportFormat { json, table };

ReportFormat parse_report_format(const std::string& text);

/// Runtimes are written as 0 unless with_timing is set, so identical runs give identical bytes.
std::string emit_report(const std::vector<CheckRecord>& records, ReportFormat format, bool with_timing = false);

bool any_failed(const std::vector<CheckRecord>& records);

}  // namespace sltensor
