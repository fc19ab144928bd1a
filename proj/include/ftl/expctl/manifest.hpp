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

#include "ftl/expctl/config.hpp"
#include "json.hpp"

namespace ftl {

/// Run record written next to the tables. Timestamps honour
/// SOURCE_DATE_EPOCH so that reproducible runs can pin them.
class Manifest {
 public:
  Manifest(const std::string& subcommand, const ExperimentConfig& config);

  nlohmann::ordered_json& derived() { return doc_["derived"]; }
  void add_seed_list(const std::string& name, const std::vector<std::uint64_t>& seeds);
  void add_deviation(const std::string& text);
  void add_output(const std::string& file);
  /// Stamps the finish time and writes `<dir>/manifest.json`.
  void write(const std::string& dir);

  const nlohmann::ordered_json& document() const { return doc_; }

 private:
  nlohmann::ordered_json doc_;
};

std::string utc_timestamp();

}  // namespace ftl
