#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ballcomp/interval_scheme.hpp"
#include "ballcomp/planar_scheme.hpp"
#include "ballcomp/scheme.hpp"

namespace ballcomp {

struct SchemeInputs {
  std::optional<int> radius;
  std::optional<IntervalRepresentation> intervals;
  std::optional<RotationSystem> rotation;
};

// Scheme names accepted by make_scheme, with short aliases.
std::vector<std::string> scheme_names();

// Throws SchemeError(UnsupportedSpec) for unknown names or missing inputs.
std::unique_ptr<Scheme> make_scheme(const std::string& name, const GraphMetric& gm, const SchemeInputs& in);

// Default scheme for a generator class name.
std::string default_scheme_for(const std::string& graph_class);

}  // namespace ballcomp
