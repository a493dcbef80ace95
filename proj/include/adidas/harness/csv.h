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

// RFC 4180 CSV output for solver records.

#ifndef ADIDAS_HARNESS_CSV_H_
#define ADIDAS_HARNESS_CSV_H_

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "adidas/solvers/solver_config.h"

namespace adidas::harness {

// Quotes a field when it holds a comma, quote or line break.
inline std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void WriteCsvRow(std::ostream& os, const std::vector<std::string>& row) {
  for (size_t k = 0; k < row.size(); ++k) {
    if (k > 0) os << ',';
    os << CsvField(row[k]);
  }
  os << "\r\n";
}

// Shortest round-trip decimal form; empty for NaN.
inline std::string FormatDouble(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

inline std::vector<std::string> MetricsHeader(bool timing) {
  std::vector<std::string> h = {"run_id",      "iteration",       "adi_estimate",
                                "reg_adi_estimate", "exact_adi", "temperature",
                                "payoffs_queried", "seed",        "x_hash"};
  if (timing) h.push_back("wall_ms");
  return h;
}

inline std::vector<std::string> MetricsRow(const std::string& run_id,
                                           std::uint64_t seed,
                                           const IterateRecord& r,
                                           bool timing) {
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(r.x_hash));
  std::vector<std::string> row = {run_id,
                                  std::to_string(r.iteration),
                                  FormatDouble(r.adi_estimate),
                                  FormatDouble(r.reg_adi_estimate),
                                  FormatDouble(r.exact_adi),
                                  FormatDouble(r.temperature),
                                  std::to_string(r.payoffs_queried),
                                  std::to_string(seed),
                                  std::string(hash)};
  if (timing) row.push_back(FormatDouble(r.wall_ms));
  return row;
}

inline void WriteMetricsCsv(std::ostream& os, const std::string& run_id,
                            std::uint64_t seed, const IterateLog& log,
                            bool timing, bool header = true) {
  if (header) WriteCsvRow(os, MetricsHeader(timing));
  for (const IterateRecord& r : log.records) {
    WriteCsvRow(os, MetricsRow(run_id, seed, r, timing));
  }
}

}  // namespace adidas::harness

#endif  // ADIDAS_HARNESS_CSV_H_
