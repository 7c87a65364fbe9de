#pragma once

// Machine-readable result records: JSON for single results, CSV for grids.
// Doubles are serialized with their shortest round-trip representation so
// that parse(serialize(x)) == x bit for bit and reruns diff clean.

#include <string>
#include <vector>

#include <json.hpp>

namespace zetagap::report {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// One CSV line from already-formatted cells (no quoting; values are numeric
/// or plain tokens).
std::string csv_line(const std::vector<std::string>& cells);

/// Envelope every command emits: the command echo, its inputs, outputs and
/// engine diagnostics, plus wall time.
class ResultRecord {
public:
  explicit ResultRecord(const std::string& command);

  void set_parameter(const std::string& key, const nlohmann::json& value);
  void set_output(const std::string& key, const nlohmann::json& value);
  void set_diagnostic(const std::string& key, const nlohmann::json& value);
  void set_wall_time(double seconds);

  const nlohmann::json& json() const { return record_; }
  std::string dump() const;

private:
  nlohmann::json record_;
};

}  // namespace zetagap::report
