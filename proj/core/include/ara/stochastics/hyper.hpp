#pragma once

#include <map>
#include <string>
#include <vector>

#include "ara/stochastics/distributions.hpp"
#include "ara/stochastics/rng.hpp"

namespace ara::stoch {

// A "random distribution": a template family whose parameters are themselves
// random. Parameter names follow the DistSpec field names ("shape", "rate",
// "lo", "hi", ...). Fixed parameters are bound with a PointMass.
struct HyperSpec {
  DistKind family;
  std::map<std::string, DistSpec> parameters;

  bool operator==(const HyperSpec&) const = default;
};

/// Parameter names of a family, in declaration order.
std::vector<std::string> parameter_names(DistKind family);

/// Throws ConfigurationError unless every family parameter is bound exactly
/// once and no unknown names are present; validates each hyper-distribution.
void validate(const HyperSpec& spec);

/// Draws each hyper-parameter independently (in parameter_names order) and
/// returns the concrete distribution. An invalid concrete distribution raises
/// ConstraintError; there is no resampling.
DistSpec draw_hyper(const HyperSpec& spec, RngStream& rng);

}  // namespace ara::stoch
