#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "ara/stochastics/rng.hpp"

namespace ara::stoch {

struct Gamma {
  double shape;
  double rate;
  bool operator==(const Gamma&) const = default;
};
struct Beta {
  double a;
  double b;
  bool operator==(const Beta&) const = default;
};
struct Binomial {
  std::int64_t n;
  double p;
  bool operator==(const Binomial&) const = default;
};
struct Uniform {
  double lo;
  double hi;
  bool operator==(const Uniform&) const = default;
};
struct Triangular {
  double min;
  double mode;
  double max;
  bool operator==(const Triangular&) const = default;
};
struct Normal {
  double mean;
  double sd;
  bool operator==(const Normal&) const = default;
};
// min(1, k) with k ~ Poisson(lambda).
struct CappedPoisson {
  double lambda;
  bool operator==(const CappedPoisson&) const = default;
};
struct PointMass {
  double x;
  bool operator==(const PointMass&) const = default;
};

using DistSpec =
    std::variant<Gamma, Beta, Binomial, Uniform, Triangular, Normal, CappedPoisson, PointMass>;

enum class DistKind { gamma, beta, binomial, uniform, triangular, normal, capped_poisson, point_mass };

DistKind kind_of(const DistSpec& spec) noexcept;
const char* to_string(DistKind kind) noexcept;

/// Throws ParameterDomainError naming the offending field (e.g. "gamma.shape").
void validate(const DistSpec& spec);

/// One variate from `spec`. Validates first.
double draw(const DistSpec& spec, RngStream& rng);

double mean(const DistSpec& spec);
double variance(const DistSpec& spec);

/// Triangular parameters as the case study writes them: (min, max, mode).
Triangular triangular_from_min_max_mode(double min, double max, double mode);

// Direct samplers. Callers are responsible for parameter validity.
double sample_uniform(double lo, double hi, RngStream& rng);
double sample_gamma(double shape, double rate, RngStream& rng);
double sample_beta(double a, double b, RngStream& rng);
double sample_normal(double mean, double sd, RngStream& rng);
double sample_triangular(double min, double mode, double max, RngStream& rng);
std::int64_t sample_binomial(std::int64_t n, double p, RngStream& rng);
std::int64_t sample_poisson(double lambda, RngStream& rng);
// Full Poisson draw clamped to 1.
std::int64_t sample_capped_poisson(double lambda, RngStream& rng);

}  // namespace ara::stoch
