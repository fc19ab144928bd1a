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


#include "ftl/expctl/manifest.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>

#include "ftl/expctl/tables.hpp"

#ifndef FTL_VERSION
#define FTL_VERSION "unknown"
#endif

namespace ftl {

std::string utc_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Manifest::Manifest(const std::string& subcommand, const ExperimentConfig& config) {
  doc_["tool"] = "ftl";
  doc_["version"] = FTL_VERSION;
  doc_["subcommand"] = subcommand;
  doc_["started_utc"] = utc_timestamp();
  doc_["master_seed"] = config.master_seed;
  doc_["config_ini"] = to_ini(config);
  doc_["derived"] = nlohmann::ordered_json::object();
  doc_["seeds"] = nlohmann::ordered_json::object();
  doc_["deviations"] = nlohmann::ordered_json::array();
  doc_["outputs"] = nlohmann::ordered_json::array();
}

void Manifest::add_seed_list(const std::string& name, const std::vector<std::uint64_t>& seeds) {
  doc_["seeds"][name] = seeds;
}

void Manifest::add_deviation(const std::string& text) { doc_["deviations"].push_back(text); }

void Manifest::add_output(const std::string& file) { doc_["outputs"].push_back(file); }

void Manifest::write(const std::string& dir) {
  doc_["finished_utc"] = utc_timestamp();
  write_text_file(dir + "/manifest.json", doc_.dump(2) + "\n");
}

}  // namespace ftl
