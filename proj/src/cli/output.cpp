// Copyright 2026 The leakctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leakctl/cli/output.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "leakctl/errors.hpp"

namespace leakctl::cli {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != header_.size()) {
    throw DimError("CsvTable: row has " + std::to_string(row.size()) + " cells, header has " +
                   std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto append_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out.push_back(',');
      out += cells[i];
    }
    out.push_back('\n');
  };
  append_line(header_);
  for (const auto& row : rows_) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& c : row) {
      if (const auto* s = std::get_if<std::string>(&c)) {
        cells.push_back(*s);
      } else if (const auto* d = std::get_if<double>(&c)) {
        cells.push_back(format_number(*d));
      } else {
        cells.push_back(std::to_string(std::get<int>(c)));
      }
    }
    append_line(cells);
  }
  return out;
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << str();
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

std::string output_path(const std::string& dir, const std::string& name) {
  std::filesystem::path d(dir.empty() ? "." : dir);
  std::error_code ec;
  std::filesystem::create_directories(d, ec);
  if (ec) throw Error("cannot create output directory '" + d.string() + "': " + ec.message());
  return (d / name).string();
}

}  // namespace leakctl::cli
