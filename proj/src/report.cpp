// SPDX-License-Identifier: Apache-2.0
#include "rmtgap/report.hpp"

#include <sstream>

namespace rmtgap {

std::string ReportRecord::json_line() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["provenance"] = provenance;
  return j.dump();
}

std::vector<std::string> csv_columns(const ReportRecord& record) {
  std::vector<std::string> cols{"command"};
  for (const auto& [k, v] : record.inputs.items()) cols.push_back("inputs." + k);
  for (const auto& [k, v] : record.outputs.items()) cols.push_back("outputs." + k);
  for (const auto& [k, v] : record.provenance.items()) cols.push_back("provenance." + k);
  return cols;
}

std::string csv_header(const std::vector<std::string>& columns) {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ",";
    out += columns[i];
  }
  return out;
}

namespace {
std::string cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}
}  // namespace

std::string csv_row(const ReportRecord& record, const std::vector<std::string>& columns) {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ",";
    const std::string& c = columns[i];
    if (c == "command") {
      out += record.command;
    } else if (c.rfind("inputs.", 0) == 0) {
      out += cell(record.inputs.value(c.substr(7), nlohmann::json()));
    } else if (c.rfind("outputs.", 0) == 0) {
      out += cell(record.outputs.value(c.substr(8), nlohmann::json()));
    } else if (c.rfind("provenance.", 0) == 0) {
      out += cell(record.provenance.value(c.substr(11), nlohmann::json()));
    }
  }
  return out;
}

}  // namespace rmtgap
