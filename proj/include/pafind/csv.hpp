// Copyright 2026 The pafind Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pafind::csv {

// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

// Quotes a field if it contains a comma, quote, CR or LF, doubling any
// embedded quotes.
std::string quote(std::string_view field);

// Writes RFC 4180 rows terminated by "\n".
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(&out) {}

  Writer& field(std::string_view value);
  Writer& field(const char* value) { return field(std::string_view(value)); }
  Writer& field(double value);
  Writer& field(std::uint64_t value);
  Writer& field(std::int64_t value);
  Writer& field(std::uint32_t value) {
    return field(static_cast<std::uint64_t>(value));
  }
  Writer& field(int value) { return field(static_cast<std::int64_t>(value)); }
  Writer& field(bool value) { return field(std::string_view(value ? "true" : "false")); }
  void end_row();

  void row(const std::vector<std::string>& fields);

 private:
  std::ostream* out_;
  bool first_ = true;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws ParameterError if the column is missing.
  std::size_t column(std::string_view name) const;
};

// Parses RFC 4180 text with a mandatory header row. Throws IoError on
// malformed quoting or ragged rows.
Table read(std::istream& in);

}  // namespace pafind::csv
