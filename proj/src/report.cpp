#include "sltensor/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>

namespace sltensor {

ReportFormat parse_report_format(const std::string& text) {
  if (text == "json") return ReportFormat::json;
  if (text == "table") return ReportFormat::table;
  throw InvalidInput("unknown format '" + text + "' (json or table)");
}

bool any_failed(const std::vector<CheckRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::fail; });
}

std::string emit_report(const std::vector<CheckRecord>& records, ReportFormat format, bool with_timing) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json doc;
    doc["version"] = kReportVersion;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json rec;
      rec["id"] = r.id;
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.params) params[k] = v;
      rec["params"] = params;
      rec["status"] = status_name(r.status);
      rec["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
      rec["runtime_ms"] = with_timing ? r.runtime_ms : 0;
      doc["checks"].push_back(rec);
    }
    return doc.dump(2) + "\n";
  }
  std::vector<std::array<std::string, 4>> rows;
  rows.push_back({"id", "status", "params", "witness"});
  for (const auto& r : records) {
    std::string p;
    for (const auto& [k, v] : r.params) p += (p.empty() ? "" : " ") + k + "=" + v;
    std::string w = r.witness.value_or("");
    if (with_timing) w += (w.empty() ? "" : " ") + std::string("[") + std::to_string(r.runtime_ms) + " ms]";
    rows.push_back({r.id, status_name(r.status), p, w});
  }
  std::array<std::size_t, 3> width{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < 3; ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 3; ++c) line += row[c] + std::string(width[c] - row[c].size() + 2, ' ');
    line += row[3];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace sltensor
