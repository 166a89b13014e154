#include "ara/stochastics/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ara/errors.hpp"

namespace ara::stoch {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ParameterDomainError(field, what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

DistKind kind_of(const DistSpec& spec) noexcept {
  return static_cast<DistKind>(spec.index());
}

const char* to_string(DistKind kind) noexcept {
  switch (kind) {
    case DistKind::gamma: return "gamma";
    case DistKind::beta: return "beta";
    case DistKind::binomial: return "binomial";
    case DistKind::uniform: return "uniform";
    case DistKind::triangular: return "triangular";
    case DistKind::normal: return "normal";
    case DistKind::capped_poisson: return "capped_poisson";
    case DistKind::point_mass: return "point_mass";
  }
  return "unknown";
}

void validate(const DistSpec& spec) {
  std::visit(
      Overloaded{
          [](const Gamma& d) {
            require(finite(d.shape) && d.shape > 0, "gamma.shape", "must be > 0");
            require(finite(d.rate) && d.rate > 0, "gamma.rate", "must be > 0");
          },
          [](const Beta& d) {
            require(finite(d.a) && d.a > 0, "beta.a", "must be > 0");
            require(finite(d.b) && d.b > 0, "beta.b", "must be > 0");
          },
          [](const Binomial& d) {
            require(d.n >= 0, "binomial.n", "must be >= 0");
            require(d.p >= 0 && d.p <= 1, "binomial.p", "must lie in [0, 1]");
          },
          [](const Uniform& d) {
            require(finite(d.lo), "uniform.lo", "must be finite");
            require(finite(d.hi) && d.lo <= d.hi, "uniform.hi", "must be >= lo");
          },
          [](const Triangular& d) {
            require(finite(d.min), "triangular.min", "must be finite");
            require(finite(d.mode) && d.min <= d.mode, "triangular.mode", "must be >= min");
            require(finite(d.max) && d.mode <= d.max, "triangular.max", "must be >= mode");
          },
          [](const Normal& d) {
            require(finite(d.mean), "normal.mean", "must be finite");
            require(finite(d.sd) && d.sd >= 0, "normal.sd", "must be >= 0");
          },
          [](const CappedPoisson& d) {
            require(finite(d.lambda) && d.lambda >= 0, "capped_poisson.lambda", "must be >= 0");
          },
          [](const PointMass& d) { require(finite(d.x), "point_mass.x", "must be finite"); },
      },
      spec);
}

double sample_uniform(double lo, double hi, RngStream& rng) {
  return lo + (hi - lo) * rng.uniform01();
}

double sample_gamma(double shape, double rate, RngStream& rng) {
  return std::gamma_distribution<double>(shape, 1.0 / rate)(rng);
}

double sample_beta(double a, double b, RngStream& rng) {
  const double x = sample_gamma(a, 1.0, rng);
  const double y = sample_gamma(b, 1.0, rng);
  return x / (x + y);
}

double sample_normal(double mean, double sd, RngStream& rng) {
  if (sd == 0) return mean;
  return std::normal_distribution<double>(mean, sd)(rng);
}

double sample_triangular(double min, double mode, double max, RngStream& rng) {
  if (max == min) return min;
  const double u = rng.uniform01();
  const double split = (mode - min) / (max - min);
  if (u < split) return min + std::sqrt(u * (max - min) * (mode - min));
  return max - std::sqrt((1 - u) * (max - min) * (max - mode));
}

std::int64_t sample_binomial(std::int64_t n, double p, RngStream& rng) {
  if (n == 0 || p == 0) return 0;
  if (p == 1) return n;
  return std::binomial_distribution<std::int64_t>(n, p)(rng);
}

std::int64_t sample_poisson(double lambda, RngStream& rng) {
  if (lambda == 0) return 0;
  return std::poisson_distribution<std::int64_t>(lambda)(rng);
}

std::int64_t sample_capped_poisson(double lambda, RngStream& rng) {
  return std::min<std::int64_t>(1, sample_poisson(lambda, rng));
}

double draw(const DistSpec& spec, RngStream& rng) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&](const Gamma& d) { return sample_gamma(d.shape, d.rate, rng); },
          [&](const Beta& d) { return sample_beta(d.a, d.b, rng); },
          [&](const Binomial& d) { return static_cast<double>(sample_binomial(d.n, d.p, rng)); },
          [&](const Uniform& d) { return sample_uniform(d.lo, d.hi, rng); },
          [&](const Triangular& d) { return sample_triangular(d.min, d.mode, d.max, rng); },
          [&](const Normal& d) { return sample_normal(d.mean, d.sd, rng); },
          [&](const CappedPoisson& d) {
            return static_cast<double>(sample_capped_poisson(d.lambda, rng));
          },
          [](const PointMass& d) { return d.x; },
      },
      spec);
}

double mean(const DistSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Gamma& d) { return d.shape / d.rate; },
          [](const Beta& d) { return d.a / (d.a + d.b); },
          [](const Binomial& d) { return static_cast<double>(d.n) * d.p; },
          [](const Uniform& d) { return 0.5 * (d.lo + d.hi); },
          [](const Triangular& d) { return (d.min + d.mode + d.max) / 3.0; },
          [](const Normal& d) { return d.mean; },
          [](const CappedPoisson& d) { return 1.0 - std::exp(-d.lambda); },
          [](const PointMass& d) { return d.x; },
      },
      spec);
}

double variance(const DistSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Gamma& d) { return d.shape / (d.rate * d.rate); },
          [](const Beta& d) {
            const double s = d.a + d.b;
            return d.a * d.b / (s * s * (s + 1));
          },
          [](const Binomial& d) { return static_cast<double>(d.n) * d.p * (1 - d.p); },
          [](const Uniform& d) { return (d.hi - d.lo) * (d.hi - d.lo) / 12.0; },
          [](const Triangular& d) {
            const double a = d.min, c = d.mode, b = d.max;
            return (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0;
          },
          [](const Normal& d) { return d.sd * d.sd; },
          [](const CappedPoisson& d) {
            const double p = 1.0 - std::exp(-d.lambda);
            return p * (1 - p);
          },
          [](const PointMass&) { return 0.0; },
      },
      spec);
}

Triangular triangular_from_min_max_mode(double min, double max, double mode) {
  Triangular t{min, mode, max};
  validate(t);
  return t;
}

}  // namespace ara::stoch
