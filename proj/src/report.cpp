#include "zetagap/report.hpp"

#include <charconv>

namespace zetagap::report {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

ResultRecord::ResultRecord(const std::string& command) {
  record_["command"] = command;
  record_["parameters"] = nlohmann::json::object();
  record_["outputs"] = nlohmann::json::object();
  record_["diagnostics"] = nlohmann::json::object();
  record_["wall_time_s"] = 0.0;
}

void ResultRecord::set_parameter(const std::string& key, const nlohmann::json& value) {
  record_["parameters"][key] = value;
}

void ResultRecord::set_output(const std::string& key, const nlohmann::json& value) {
  record_["outputs"][key] = value;
}

void ResultRecord::set_diagnostic(const std::string& key, const nlohmann::json& value) {
  record_["diagnostics"][key] = value;
}

void ResultRecord::set_wall_time(double seconds) { record_["wall_time_s"] = seconds; }

std::string ResultRecord::dump() const { return record_.dump(2) + "\n"; }

}  // namespace zetagap::report
