// Copyright 2026 The adidas-nfg Authors.
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

// A small "key = value" text format for experiment configs. Lines starting
// with '#' are comments; keys may repeat and later values win.

#ifndef ADIDAS_HARNESS_KEY_VALUE_H_
#define ADIDAS_HARNESS_KEY_VALUE_H_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adidas/base.h"

namespace adidas::harness {

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

inline std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<KeyValue> ParseKeyValues(std::string_view text) {
  std::vector<KeyValue> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string line = Trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    KeyValue kv{Trim(line.substr(0, eq)), Trim(line.substr(eq + 1)), line_no};
    if (kv.key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    }
    out.push_back(std::move(kv));
  }
  return out;
}

inline std::vector<KeyValue> ReadKeyValueFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return ParseKeyValues(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

inline double ParseDoubleValue(const std::string& key, const std::string& v) {
  double out = 0.0;
  const char* first = v.data();
  if (!v.empty() && v[0] == '+') ++first;
  const auto [end, ec] = std::from_chars(first, v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || end != v.data() + v.size()) {
    if (v == "inf" || v == "infinity") return std::numeric_limits<double>::infinity();
    throw ConfigError("'" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

inline std::int64_t ParseIntValue(const std::string& key, const std::string& v) {
  std::int64_t out = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || end != v.data() + v.size()) {
    // Accept integral values written in scientific notation, e.g. 1e4.
    const double d = ParseDoubleValue(key, v);
    if (d != static_cast<double>(static_cast<std::int64_t>(d))) {
      throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
    }
    return static_cast<std::int64_t>(d);
  }
  return out;
}

inline bool ParseBoolValue(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("'" + key + "' expects a boolean, got '" + v + "'");
}

// Comma-separated list of raw items.
inline std::vector<std::string> SplitList(const std::string& v) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    const std::size_t end = std::min(v.find(',', pos), v.size());
    const std::string item = Trim(std::string_view(v).substr(pos, end - pos));
    if (!item.empty()) out.push_back(item);
    pos = end + 1;
  }
  return out;
}

}  // namespace adidas::harness

#endif  // ADIDAS_HARNESS_KEY_VALUE_H_
