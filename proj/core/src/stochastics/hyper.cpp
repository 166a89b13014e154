#include "ara/stochastics/hyper.hpp"

#include <cmath>

#include "ara/errors.hpp"

namespace ara::stoch {

std::vector<std::string> parameter_names(DistKind family) {
  switch (family) {
    case DistKind::gamma: return {"shape", "rate"};
    case DistKind::beta: return {"a", "b"};
    case DistKind::binomial: return {"n", "p"};
    case DistKind::uniform: return {"lo", "hi"};
    case DistKind::triangular: return {"min", "mode", "max"};
    case DistKind::normal: return {"mean", "sd"};
    case DistKind::capped_poisson: return {"lambda"};
    case DistKind::point_mass: return {"x"};
  }
  return {};
}

void validate(const HyperSpec& spec) {
  const auto names = parameter_names(spec.family);
  for (const auto& name : names) {
    if (!spec.parameters.contains(name)) {
      throw ConfigurationError(std::string("hyper-spec for ") + to_string(spec.family) +
                               " does not bind parameter '" + name + "'");
    }
  }
  for (const auto& [name, dist] : spec.parameters) {
    bool known = false;
    for (const auto& n : names) known = known || n == name;
    if (!known) {
      throw ConfigurationError(std::string("hyper-spec for ") + to_string(spec.family) +
                               " has unknown parameter '" + name + "'");
    }
    validate(dist);
  }
}

DistSpec draw_hyper(const HyperSpec& spec, RngStream& rng) {
  validate(spec);
  std::vector<double> v;
  for (const auto& name : parameter_names(spec.family)) {
    v.push_back(draw(spec.parameters.at(name), rng));
  }

  DistSpec out = PointMass{0};
  switch (spec.family) {
    case DistKind::gamma: out = Gamma{v[0], v[1]}; break;
    case DistKind::beta: out = Beta{v[0], v[1]}; break;
    case DistKind::binomial: {
      if (v[0] != std::floor(v[0])) {
        throw ConstraintError("hyper-draw binomial.n is not an integer");
      }
      out = Binomial{static_cast<std::int64_t>(v[0]), v[1]};
      break;
    }
    case DistKind::uniform: out = Uniform{v[0], v[1]}; break;
    case DistKind::triangular: out = Triangular{v[0], v[1], v[2]}; break;
    case DistKind::normal: out = Normal{v[0], v[1]}; break;
    case DistKind::capped_poisson: out = CappedPoisson{v[0]}; break;
    case DistKind::point_mass: out = PointMass{v[0]}; break;
  }
  try {
    validate(out);
  } catch (const ParameterDomainError& e) {
    throw ConstraintError(std::string("hyper-draw violates template domain: ") + e.what());
  }
  return out;
}

}  // namespace ara::stoch
