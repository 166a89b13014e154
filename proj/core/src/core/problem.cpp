#include "ara/core/problem.hpp"

#include <algorithm>
#include <cmath>

#include "ara/errors.hpp"

namespace ara {

void DefenderProblem::validate() const {
  if (decisions.empty()) throw ConfigurationError("defender decision space is empty");
  if (!cost_sampler) throw ConfigurationError("defender problem has no cost sampler");
  if (!utility) throw ConfigurationError("defender problem has no utility function");

  // Spot-check monotonicity on a multiplicative cost grid.
  double previous = utility(0.0);
  if (!std::isfinite(previous)) throw ConfigurationError("utility(0) is not finite");
  for (double cost = 1e-3; cost <= 1e10; cost *= 1.5) {
    const double u = utility(cost);
    if (!std::isfinite(u)) {
      throw ConfigurationError("utility is not finite at cost " + std::to_string(cost));
    }
    if (u > previous) {
      throw ConfigurationError("utility increases with cost near " + std::to_string(cost));
    }
    previous = u;
  }
}

bool AttackPolicyTable::contains(std::string_view defence) const {
  return std::find(defences.begin(), defences.end(), defence) != defences.end();
}

std::span<const double> AttackPolicyTable::row(std::string_view defence) const {
  const auto it = std::find(defences.begin(), defences.end(), defence);
  if (it == defences.end()) {
    throw ConfigurationError("attack table has no row for defence '" + std::string(defence) + "'");
  }
  return probabilities[static_cast<std::size_t>(it - defences.begin())];
}

void AttackPolicyTable::validate() const {
  if (defences.size() != probabilities.size()) {
    throw ConfigurationError("attack table has mismatched defence and row counts");
  }
  for (std::size_t d = 0; d < probabilities.size(); ++d) {
    const auto& p = probabilities[d];
    if (p.size() != attack_space.size()) {
      throw ConfigurationError("attack table row '" + defences[d] + "' has wrong width");
    }
    double sum = 0.0;
    for (double x : p) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw ConfigurationError("attack table row '" + defences[d] + "' has entry outside [0,1]");
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ConfigurationError("attack table row '" + defences[d] + "' does not sum to 1");
    }
  }
}

AttackPolicyTable AttackPolicyTable::point_mass(std::vector<std::string> defences,
                                                std::vector<int> attack_space, int attack) {
  const auto it = std::find(attack_space.begin(), attack_space.end(), attack);
  if (it == attack_space.end()) throw ArgumentError("point-mass attack not in attack space");
  std::vector<double> row(attack_space.size(), 0.0);
  row[static_cast<std::size_t>(it - attack_space.begin())] = 1.0;

  AttackPolicyTable table;
  table.probabilities.assign(defences.size(), row);
  table.defences = std::move(defences);
  table.attack_space = std::move(attack_space);
  return table;
}

}  // namespace ara
