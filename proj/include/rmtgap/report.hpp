// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace rmtgap {

// One self-describing CLI computation: every numeric output carries a route
// tag in `provenance` (toeplitz | fredholm | rh-model | painleve | constants).
struct ReportRecord {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  nlohmann::json provenance = nlohmann::json::object();

  void set_output(const std::string& key, const nlohmann::json& value, const std::string& route) {
    outputs[key] = value;
    provenance[key] = route;
  }

  std::string json_line() const;
};

// CSV schema is the flattened key set (command, inputs.*, outputs.*,
// provenance.*); records emitted by one command share it.
std::vector<std::string> csv_columns(const ReportRecord& record);
std::string csv_header(const std::vector<std::string>& columns);
std::string csv_row(const ReportRecord& record, const std::vector<std::string>& columns);

}  // namespace rmtgap
