// Copyright 2026 The Scalecheck Authors
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

#include "scalecheck/config.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "scalecheck/error.hpp"

namespace scalecheck {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> parse_string_array(const std::string& value,
                                            const std::string& key) {
  std::string body = trim(value);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw Error(ErrorKind::kSchemaViolation,
                "config key '" + key + "' expects a string array");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '"') {
      throw Error(ErrorKind::kSchemaViolation,
                  "config key '" + key + "' expects quoted strings");
    }
    std::size_t end = body.find('"', pos + 1);
    if (end == std::string::npos) {
      throw Error(ErrorKind::kSchemaViolation,
                  "config key '" + key + "' has an unterminated string");
    }
    out.push_back(body.substr(pos + 1, end - pos - 1));
    pos = end + 1;
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
    if (pos < body.size()) {
      if (body[pos] != ',') {
        throw Error(ErrorKind::kSchemaViolation,
                    "config key '" + key + "' has malformed array syntax");
      }
      ++pos;
      while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
    }
  }
  return out;
}

double parse_number(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (trim(value.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kSchemaViolation,
              "config key '" + key + "' expects a number, got '" + value + "'");
}

void apply_key(AnalysisConfig& config, const std::string& key,
               const std::string& raw_value) {
  if (key == "scrollable_classes") {
    config.exemptions.scrollable_classes = parse_string_array(raw_value, key);
  } else if (key == "collapsible_classes") {
    config.exemptions.collapsible_classes = parse_string_array(raw_value, key);
  } else if (key == "area_tolerance") {
    config.intra.area_tolerance = parse_number(raw_value, key);
  } else if (key == "ssim_threshold") {
    config.intra.ssim_threshold = parse_number(raw_value, key);
  } else if (key == "icon_match_slack") {
    config.intra.icon_match_slack = static_cast<int>(parse_number(raw_value, key));
  } else {
    throw Error(ErrorKind::kSchemaViolation, "unknown config key '" + key + "'");
  }
}

AnalysisConfig load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchemaViolation,
                "config " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorKind::kSchemaViolation,
                "config " + path.string() + ": top level must be an object");
  }
  AnalysisConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "scrollable_classes" || key == "collapsible_classes") {
      if (!value.is_array()) {
        throw Error(ErrorKind::kSchemaViolation,
                    "config key '" + key + "' expects a string array");
      }
      std::vector<std::string> items;
      for (const auto& item : value) {
        if (!item.is_string()) {
          throw Error(ErrorKind::kSchemaViolation,
                      "config key '" + key + "' expects strings");
        }
        items.push_back(item.get<std::string>());
      }
      if (key == "scrollable_classes") {
        config.exemptions.scrollable_classes = std::move(items);
      } else {
        config.exemptions.collapsible_classes = std::move(items);
      }
    } else if (key == "area_tolerance" || key == "ssim_threshold" ||
               key == "icon_match_slack") {
      if (!value.is_number()) {
        throw Error(ErrorKind::kSchemaViolation,
                    "config key '" + key + "' expects a number");
      }
      if (key == "area_tolerance") {
        config.intra.area_tolerance = value.get<double>();
      } else if (key == "ssim_threshold") {
        config.intra.ssim_threshold = value.get<double>();
      } else {
        config.intra.icon_match_slack = value.get<int>();
      }
    } else {
      throw Error(ErrorKind::kSchemaViolation, "unknown config key '" + key + "'");
    }
  }
  return config;
}

AnalysisConfig load_toml(const std::filesystem::path& path) {
  std::ifstream in(path);
  AnalysisConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kSchemaViolation,
                  "config " + path.string() + " line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    apply_key(config, key, value);
  }
  return config;
}

}  // namespace

AnalysisConfig load_config(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::kMissingFile, "config file not found: " + path.string());
  }
  std::string ext = path.extension().string();
  if (ext == ".json") return load_json(path);
  if (ext == ".toml") return load_toml(path);
  throw Error(ErrorKind::kSchemaViolation,
              "unsupported config format '" + ext + "' (use .json or .toml)");
}

}  // namespace scalecheck
