// Copyright 2026 The ftl Authors
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

#include <string>
#include <vector>

namespace ftl {

/// CSV table with a header row. Cells are stored as text; numbers should be
/// formatted with format_double so files round-trip exactly.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  explicit Table(std::vector<std::string> cols = {}) : columns(std::move(cols)) {}

  /// Throws std::invalid_argument when the row width differs from the header.
  void add(std::vector<std::string> row);
  std::size_t column(const std::string& name) const;

  std::string to_csv() const;
  static Table from_csv(const std::string& text);
};

/// Writes bytes to a file (LF line endings, no locale), creating parent
/// directories. Throws std::runtime_error on failure.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace ftl
