#include <cmath>
#include <cstdio>
#include <ostream>

#include "hyperlandau_cli/cli.hpp"

namespace hyperlandau::cli {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw Error(ErrorCode::InvalidParameter, "row width does not match the header");
  for (auto& cell : row) {
    if (cell && *cell == 0.0) cell = 0.0;  // no "-0" in output
  }
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      if (row[j]) os << format_number(*row[j]);
    }
    os << '\n';
  }
}

nlohmann::ordered_json table_json(const Table& t, const nlohmann::ordered_json& params) {
  nlohmann::ordered_json doc;
  doc["params"] = params;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j])
        r[t.columns[j]] = *row[j];
      else
        r[t.columns[j]] = nullptr;
    }
    doc["rows"].push_back(std::move(r));
  }
  return doc;
}

Table table_from_json(const nlohmann::ordered_json& doc) {
  Table t;
  const auto& rows = doc.at("rows");
  if (rows.empty()) return t;
  for (const auto& [key, _] : rows.front().items()) t.columns.push_back(key);
  for (const auto& r : rows) {
    std::vector<Table::Cell> row;
    for (const auto& c : t.columns) {
      const auto& v = r.at(c);
      row.push_back(v.is_null() ? Table::Cell{} : Table::Cell{v.get<double>()});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_table(std::ostream& os, const Table& t, const RunConfig& config) {
  if (config.format == Format::Csv)
    write_csv(os, t);
  else
    os << table_json(t, config.params_json()).dump(2) << '\n';
}

}  // namespace hyperlandau::cli
