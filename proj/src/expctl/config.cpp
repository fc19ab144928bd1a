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


#include "ftl/expctl/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ftl/circuits/circuit_io.hpp"
#include "ftl/core/state_vector.hpp"
#include "json.hpp"

namespace ftl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& what) {
  throw std::invalid_argument("config: " + key + " = '" + value + "': " + what);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) bad_value(key, v, "trailing characters");
    return x;
  } catch (const std::invalid_argument&) {
    bad_value(key, v, "expected a number");
  } catch (const std::out_of_range&) {
    bad_value(key, v, "number out of range");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) bad_value(key, v, "expected an integer");
    return x;
  } catch (const std::invalid_argument&) {
    bad_value(key, v, "expected an integer");
  } catch (const std::out_of_range&) {
    bad_value(key, v, "integer out of range");
  }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    bad_value(key, v, "expected an unsigned integer");
  try {
    return std::stoull(v);
  } catch (const std::out_of_range&) {
    bad_value(key, v, "integer out of range");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, v, "expected true or false");
}

std::vector<int> to_int_list(const std::string& key, const std::string& v) {
  std::vector<int> out;
  for (const auto& item : split_list(v)) out.push_back(static_cast<int>(to_int(key, item)));
  return out;
}

std::vector<double> to_double_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split_list(v)) out.push_back(to_double(key, item));
  return out;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_same_v<T, double>) {
      out += format_double(v[i]);
    } else if constexpr (std::is_same_v<T, std::string>) {
      out += v[i];
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

using Setter = void (*)(ExperimentConfig&, const std::string& key, const std::string& value);

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"lattice.rows", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.rows = static_cast<int>(to_int(k, v)); }},
      {"lattice.cols", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.cols = static_cast<int>(to_int(k, v)); }},
      {"drive.b_radius", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.b_radius = to_double(k, v); }},
      {"drive.periods", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.periods = static_cast<int>(to_int(k, v)); }},
      {"disorder.realizations", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.realizations = static_cast<int>(to_int(k, v)); }},
      {"disorder.master_seed", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.master_seed = to_u64(k, v); }},
      {"noise.enabled", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.noise.enabled = to_bool(k, v); }},
      {"noise.t1_us", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.noise.t1_us = to_double(k, v); }},
      {"noise.t2_us", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.noise.t2_us = to_double(k, v); }},
      {"noise.sq_layer_ns", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.noise.sq_layer_ns = to_double(k, v); }},
      {"noise.cz_layer_ns", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         c.noise.cz_layer_ns = to_double(k, v);
         c.cz_layer_ns_set = true;
       }},
      {"noise.eps_sq", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.noise.eps_sq = to_double(k, v); }},
      {"noise.eps_cz", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.noise.eps_cz = to_double(k, v); }},
      {"noise.eps_cz_idle", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         c.noise.eps_cz_idle = to_double(k, v);
         c.eps_cz_idle_set = true;
       }},
      {"noise.readout_f0", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (c.noise.readout.empty()) c.noise.readout.push_back({});
         c.noise.readout[0].f0 = to_double(k, v);
       }},
      {"noise.readout_f1", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         if (c.noise.readout.empty()) c.noise.readout.push_back({});
         c.noise.readout[0].f1 = to_double(k, v);
       }},
      {"noise.trajectories", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.trajectories = static_cast<int>(to_int(k, v)); }},
      {"compile.dynamical_decoupling", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.dynamical_decoupling = to_bool(k, v); }},
      {"observables.strings", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.observables = split_list(v); }},
      {"tee.division", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.tee_division = v; }},
      {"tee.region_a", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.region_a = to_int_list(k, v); }},
      {"tee.region_b", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.region_b = to_int_list(k, v); }},
      {"tee.region_c", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.region_c = to_int_list(k, v); }},
      {"tee.quench", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.quench = to_bool(k, v); }},
      {"sweep.b_values", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.b_values = to_double_list(k, v); }},
      {"sweep.periods", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.sweep_periods = static_cast<int>(to_int(k, v)); }},
      {"lifetime.sizes", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.lifetime_sizes = to_int_list(k, v); }},
      {"lifetime.horizon", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.horizon = static_cast<int>(to_int(k, v)); }},
      {"lifetime.threshold", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.threshold = to_double(k, v); }},
      {"synth.target", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.synth_target = v; }},
      {"synth.angle", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.synth_angle = to_double(k, v); }},
      {"synth.name", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.synth_name = v; }},
      {"synth.form", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.synth_form = v; }},
      {"synth.population", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.synth_population = static_cast<int>(to_int(k, v)); }},
      {"synth.generations", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.synth_generations = static_cast<int>(to_int(k, v)); }},
      {"synth.initial_depth", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.synth_initial_depth = static_cast<int>(to_int(k, v)); }},
      {"synth.depth_step", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.synth_depth_step = static_cast<int>(to_int(k, v)); }},
      {"synth.patience", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.synth_patience = static_cast<int>(to_int(k, v)); }},
      {"synth.max_iters", [](ExperimentConfig& c, const std::string& k, const std::string& v) { c.synth_max_iters = static_cast<int>(to_int(k, v)); }},
      {"output.directory", [](ExperimentConfig& c, const std::string&, const std::string& v) { c.output_dir = v; }},
      {"output.formats", [](ExperimentConfig& c, const std::string& k, const std::string& v) {
         c.write_svg = false;
         for (const auto& f : split_list(v)) {
           if (f == "svg") c.write_svg = true;
           else if (f != "csv") bad_value(k, v, "formats are csv and svg");
         }
       }},
  };
  return table;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("config: " + what);
}

}  // namespace

ExperimentConfig parse_config(const std::string& ini_text) {
  ExperimentConfig c;
  boost::property_tree::ptree tree;
  std::istringstream in(ini_text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw std::invalid_argument("config: line " + std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      if (!body.data().empty())
        throw std::invalid_argument("config: key '" + section + "' must sit inside a [section]");
      const bool known = std::any_of(setters().begin(), setters().end(),
                                     [&](const auto& kv) { return kv.first.rfind(section + ".", 0) == 0; });
      if (!known) throw std::invalid_argument("config: unknown section [" + section + "]");
      continue;
    }
    for (const auto& [key, value] : body) {
      const std::string full = section + "." + key;
      const auto it = setters().find(full);
      if (it == setters().end()) throw std::invalid_argument("config: unknown key '" + full + "'");
      it->second(c, full, trim(value.data()));
    }
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.contains("config_ini")) throw std::invalid_argument("config: manifest '" + path + "' has no config_ini");
    return parse_config(doc.at("config_ini").get<std::string>());
  }
  return parse_config(text);
}

void ExperimentConfig::validate() const {
  require(rows >= 2 && cols >= 2, "lattice.rows and lattice.cols must be >= 2");
  require(rows % 2 == 1, "lattice.rows must be odd");
  require(rows * cols <= kMaxStateQubits, "lattice holds at most 24 qubits for dense state vectors");
  require(b_radius >= 0.0, "drive.b_radius must be >= 0");
  require(periods >= 0, "drive.periods must be >= 0");
  require(realizations >= 1, "disorder.realizations must be >= 1");
  require(trajectories >= 1, "noise.trajectories must be >= 1");
  if (noise.enabled) noise.validate();
  require(!observables.empty(), "observables.strings must not be empty");
  require(tee_division == "four" || tee_division == "six" || tee_division == "both" || tee_division == "custom",
          "tee.division must be four, six, both or custom");
  if (tee_division == "custom")
    require(!region_a.empty() && !region_b.empty() && !region_c.empty(),
            "tee.region_a, tee.region_b and tee.region_c are required for a custom division");
  require(!b_values.empty(), "sweep.b_values must not be empty");
  require(std::is_sorted(b_values.begin(), b_values.end()), "sweep.b_values must be sorted ascending");
  for (double b : b_values) require(b >= 0.0, "sweep.b_values must be >= 0");
  require(sweep_periods >= 1, "sweep.periods must be >= 1");
  require(!lifetime_sizes.empty(), "lifetime.sizes must not be empty");
  for (int n : lifetime_sizes) lifetime_lattice_shape(n);
  require(horizon >= 1, "lifetime.horizon must be >= 1");
  require(threshold > 0.0 && threshold < 1.0, "lifetime.threshold must lie in (0, 1)");
  require(synth_form == "real" || synth_form == "modulus", "synth.form must be real or modulus");
  require(synth_population >= 1 && synth_generations >= 1 && synth_initial_depth >= 1 && synth_depth_step >= 1 &&
              synth_patience >= 1 && synth_max_iters >= 0,
          "synth counts must be positive");
  require(!output_dir.empty(), "output.directory must not be empty");
}

std::pair<int, int> lifetime_lattice_shape(int n) {
  if (n != 6 && n != 9 && n != 12 && n != 15)
    throw std::invalid_argument("config: lifetime.sizes entries must be 6, 9, 12 or 15 (3x2 to 3x5), got " +
                                std::to_string(n));
  return {3, n / 3};
}

std::string to_ini(const ExperimentConfig& c) {
  std::ostringstream o;
  o << "[lattice]\nrows = " << c.rows << "\ncols = " << c.cols << "\n\n";
  o << "[drive]\nb_radius = " << format_double(c.b_radius) << "\nperiods = " << c.periods << "\n\n";
  o << "[disorder]\nrealizations = " << c.realizations << "\nmaster_seed = " << c.master_seed << "\n\n";
  o << "[noise]\nenabled = " << (c.noise.enabled ? "true" : "false") << "\nt1_us = " << format_double(c.noise.t1_us)
    << "\n";
  if (c.noise.t2_us) o << "t2_us = " << format_double(*c.noise.t2_us) << "\n";
  o << "sq_layer_ns = " << format_double(c.noise.sq_layer_ns) << "\n";
  if (c.cz_layer_ns_set) o << "cz_layer_ns = " << format_double(c.noise.cz_layer_ns) << "\n";
  o << "eps_sq = " << format_double(c.noise.eps_sq) << "\neps_cz = " << format_double(c.noise.eps_cz) << "\n";
  if (c.eps_cz_idle_set) o << "eps_cz_idle = " << format_double(c.noise.eps_cz_idle) << "\n";
  if (!c.noise.readout.empty())
    o << "readout_f0 = " << format_double(c.noise.readout[0].f0) << "\nreadout_f1 = "
      << format_double(c.noise.readout[0].f1) << "\n";
  o << "trajectories = " << c.trajectories << "\n\n";
  o << "[compile]\ndynamical_decoupling = " << (c.dynamical_decoupling ? "true" : "false") << "\n\n";
  o << "[observables]\nstrings = " << join(c.observables) << "\n\n";
  o << "[tee]\ndivision = " << c.tee_division << "\n";
  if (!c.region_a.empty()) o << "region_a = " << join(c.region_a) << "\n";
  if (!c.region_b.empty()) o << "region_b = " << join(c.region_b) << "\n";
  if (!c.region_c.empty()) o << "region_c = " << join(c.region_c) << "\n";
  o << "quench = " << (c.quench ? "true" : "false") << "\n\n";
  o << "[sweep]\nb_values = " << join(c.b_values) << "\nperiods = " << c.sweep_periods << "\n\n";
  o << "[lifetime]\nsizes = " << join(c.lifetime_sizes) << "\nhorizon = " << c.horizon
    << "\nthreshold = " << format_double(c.threshold) << "\n\n";
  o << "[synth]\ntarget = " << c.synth_target << "\nangle = " << format_double(c.synth_angle) << "\nname = "
    << c.synth_name << "\nform = " << c.synth_form << "\npopulation = " << c.synth_population
    << "\ngenerations = " << c.synth_generations << "\ninitial_depth = " << c.synth_initial_depth
    << "\ndepth_step = " << c.synth_depth_step << "\npatience = " << c.synth_patience
    << "\nmax_iters = " << c.synth_max_iters << "\n\n";
  o << "[output]\ndirectory = " << c.output_dir << "\nformats = " << (c.write_svg ? "csv, svg" : "csv") << "\n";
  return o.str();
}

}  // namespace ftl
