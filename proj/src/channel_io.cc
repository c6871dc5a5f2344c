// Copyright 2026 The sdpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdpi/channel_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace sdpi {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double v = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": cannot parse '" +
                                std::string(field) + "' as a number");
  }
  return v;
}

std::vector<std::vector<double>> parse_csv_rows(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      row.push_back(parse_number(line.substr(start, comma - start), line_no));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Channel parse_channel_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("channel JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw std::invalid_argument("channel JSON: expected an object with a \"rows\" array");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
    const auto& r = doc["rows"][i];
    if (!r.is_array()) {
      throw std::invalid_argument("channel row " + std::to_string(i) + " is not an array");
    }
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) {
        throw std::invalid_argument("channel row " + std::to_string(i) +
                                    " has a non-numeric entry");
      }
      row.push_back(v.get<double>());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::invalid_argument("channel JSON: no rows");
  }
  return Channel(rows);
}

Channel parse_channel_csv(std::string_view text) {
  auto rows = parse_csv_rows(text);
  if (rows.empty()) {
    throw std::invalid_argument("channel CSV: no rows");
  }
  return Channel(rows);
}

Channel parse_channel(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    return parse_channel_json(body);
  }
  return parse_channel_csv(body);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Channel load_channel(const std::filesystem::path& path) { return parse_channel(read_file(path)); }

std::string channel_to_json(const Channel& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < c.n_inputs(); ++i) {
    auto r = c.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return nlohmann::json{{"rows", rows}}.dump();
}

Distribution parse_distribution(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("distribution JSON: ") + e.what());
    }
    if (!doc.contains("probs") || !doc["probs"].is_array()) {
      throw std::invalid_argument("distribution JSON: expected a \"probs\" array");
    }
    return Distribution(doc["probs"].get<std::vector<double>>());
  }
  auto rows = parse_csv_rows(body);
  if (rows.size() != 1) {
    throw std::invalid_argument("distribution CSV: expected exactly one line");
  }
  return Distribution(std::move(rows.front()));
}

Distribution load_distribution(const std::filesystem::path& path) {
  return parse_distribution(read_file(path));
}

}  // namespace sdpi
