/*
Copyright 2026 The slac Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

     https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SLAC_OCP_REGISTRY_HPP
#define SLAC_OCP_REGISTRY_HPP

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "slac/ocp/double_integrator.hpp"
#include "slac/ocp/dubins.hpp"
#include "slac/ocp/trace_attitude.hpp"

namespace slac::ocp {

using ParamMap = std::map<std::string, std::string>;

namespace detail {

class ParamReader {
 public:
  explicit ParamReader(const ParamMap& params) : params_(params) {}

  void read(const std::string& key, double& out) {
    seen_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) return;
    try {
      std::size_t pos = 0;
      out = std::stod(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError("problem." + key + ": expected a number, got '" + it->second + "'");
    }
  }

  void read(const std::string& key, bool& out) {
    seen_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) return;
    if (it->second == "true" || it->second == "1") {
      out = true;
    } else if (it->second == "false" || it->second == "0") {
      out = false;
    } else {
      throw ConfigError("problem." + key + ": expected true/false, got '" + it->second + "'");
    }
  }

  void reject_unknown(const std::string& problem) const {
    for (const auto& [key, value] : params_) {
      if (!seen_.contains(key)) {
        throw ConfigError("problem." + key + ": unknown parameter for problem '" + problem + "'");
      }
    }
  }

 private:
  const ParamMap& params_;
  std::set<std::string> seen_;
};

}  // namespace detail

using ProblemFactory = std::function<std::shared_ptr<const Problem>(const ParamMap&)>;

inline std::map<std::string, ProblemFactory>& custom_problem_factories() {
  static std::map<std::string, ProblemFactory> factories;
  return factories;
}

/// Makes a user-defined problem selectable by name in config files.
/// Registration is not synchronized; do it before any concurrent lookups.
inline void register_problem(const std::string& name, ProblemFactory factory) {
  custom_problem_factories()[name] = std::move(factory);
}

/// Builds a bundled problem from its config name and string parameters.
/// Unknown names and unknown parameter keys are rejected.
inline std::shared_ptr<const Problem> make_problem(const std::string& name,
                                                   const ParamMap& params = {}) {
  if (auto it = custom_problem_factories().find(name); it != custom_problem_factories().end()) {
    return it->second(params);
  }
  detail::ParamReader reader(params);
  if (name == "double_integrator") {
    DoubleIntegrator::Params p;
    reader.read("domain_radius", p.domain_radius);
    reader.read("target_tolerance", p.target_tolerance);
    reader.read("control_bound", p.control_bound);
    reader.reject_unknown(name);
    return std::make_shared<DoubleIntegrator>(p);
  }
  if (name == "dubins") {
    Dubins::Params p;
    reader.read("target_radius", p.target_radius);
    reader.read("domain_radius", p.domain_radius);
    reader.read("control_bound", p.control_bound);
    reader.read("periodic_embedding", p.periodic_embedding);
    reader.reject_unknown(name);
    return std::make_shared<Dubins>(p);
  }
  if (name == "trace") {
    TraceAttitude::Params p;
    reader.read("control_bound", p.control_bound);
    reader.read("omega_sq_min", p.omega_sq_min);
    reader.read("omega_sq_max", p.omega_sq_max);
    reader.read("euler_max", p.euler_max);
    reader.read("q_tolerance", p.q_tolerance);
    reader.read("omega_tolerance", p.omega_tolerance);
    reader.read("target_perturbation", p.target_perturbation);
    reader.reject_unknown(name);
    return std::make_shared<TraceAttitude>(p);
  }
  if (name.empty()) throw ConfigError("problem.name: missing problem name");
  throw ConfigError("problem.name: unknown problem '" + name +
                    "' (expected double_integrator, dubins or trace)");
}

}  // namespace slac::ocp

#endif  // SLAC_OCP_REGISTRY_HPP
