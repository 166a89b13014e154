#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ara/core/parallel.hpp"
#include "ara/core/problem.hpp"
#include "ara/errors.hpp"
#include "ara/stochastics/rng.hpp"

namespace ara {

template <class T>
struct Labelled {
  std::string label;
  T value;
};

/// The attacker's decision problem as seen by the defender: utilities and
/// probabilities are random, drawn per hyper-draw from `hyper_model`.
template <class Defence, class Hyper>
struct AttackerProblem {
  // Ascending, contains 0 (no attack).
  std::vector<int> attack_space;
  std::function<Hyper(stoch::RngStream&)> hyper_model;
  // Attacker result c_a for one realisation.
  std::function<double(int attack, const Defence&, const Hyper&, stoch::RngStream&)> payoff_sampler;
  std::function<double(double payoff, const Hyper&)> random_utility;

  void validate() const {
    if (attack_space.empty()) throw ConfigurationError("attack space is empty");
    for (std::size_t i = 1; i < attack_space.size(); ++i) {
      if (attack_space[i] <= attack_space[i - 1]) {
        throw ConfigurationError("attack space must be strictly ascending");
      }
    }
    bool has_zero = false;
    for (int a : attack_space) has_zero = has_zero || a == 0;
    if (!has_zero) throw ConfigurationError("attack space must contain 0 (no attack)");
    if (!hyper_model || !payoff_sampler || !random_utility) {
      throw ConfigurationError("attacker problem has an unset sampler or utility");
    }
  }
};

inline constexpr std::uint64_t kHyperStream = 0x4859;
inline constexpr std::uint64_t kInnerStream = 0x494e;

/// Monte Carlo estimate of the random optimal attack per defence.
///
/// For each of K hyper-draws the attacker's expected random utility of every
/// attack is estimated with M inner samples and the argmax recorded; ties go
/// to the smaller attack. Row entries are #{argmax = a} / K.
///
/// Hyper-draw k uses rng.derive({kHyperStream, k}); inner sample m of attack
/// index t uses rng.derive({kInnerStream, k, t, m}). Neither depends on the
/// defence, so rows are computed under common random numbers, and attacks are
/// estimated from independent streams.
template <class Defence, class Hyper>
AttackPolicyTable solve_attacker_distribution(const AttackerProblem<Defence, Hyper>& problem,
                                              std::span<const Labelled<Defence>> defences,
                                              std::int64_t k_draws, std::int64_t m_inner,
                                              const stoch::RngStream& rng,
                                              const Execution& exec = {}) {
  problem.validate();
  if (k_draws < 1) throw ArgumentError("K must be >= 1");
  if (m_inner < 1) throw ArgumentError("M must be >= 1");

  const std::size_t n_def = defences.size();
  const std::size_t n_att = problem.attack_space.size();
  const auto K = static_cast<std::size_t>(k_draws);
  // choice[k * n_def + d] = index into attack_space
  std::vector<std::size_t> choice(K * n_def, 0);

  parallel_for(K, exec.threads, [&](std::size_t k) {
    stoch::RngStream hyper_stream = rng.derive({kHyperStream, static_cast<std::uint64_t>(k)});
    const Hyper hyper = problem.hyper_model(hyper_stream);
    for (std::size_t d = 0; d < n_def; ++d) {
      std::size_t best = 0;
      double best_eu = -INFINITY;
      for (std::size_t t = 0; t < n_att; ++t) {
        double sum = 0.0;
        for (std::int64_t m = 0; m < m_inner; ++m) {
          stoch::RngStream inner = rng.derive({kInnerStream, static_cast<std::uint64_t>(k),
                                               static_cast<std::uint64_t>(t),
                                               static_cast<std::uint64_t>(m)});
          const double payoff = problem.payoff_sampler(problem.attack_space[t],
                                                       defences[d].value, hyper, inner);
          sum += problem.random_utility(payoff, hyper);
        }
        const double eu = sum / static_cast<double>(m_inner);
        if (!std::isfinite(eu)) {
          throw EvaluationError("non-finite attacker expected utility for defence '" +
                                defences[d].label + "'");
        }
        if (eu > best_eu) {
          best_eu = eu;
          best = t;
        }
      }
      choice[k * n_def + d] = best;
    }
  });

  AttackPolicyTable table;
  table.attack_space = problem.attack_space;
  table.draws_used = k_draws;
  for (std::size_t d = 0; d < n_def; ++d) {
    std::vector<std::int64_t> counts(n_att, 0);
    for (std::size_t k = 0; k < K; ++k) ++counts[choice[k * n_def + d]];
    std::vector<double> row(n_att);
    for (std::size_t t = 0; t < n_att; ++t) {
      row[t] = static_cast<double>(counts[t]) / static_cast<double>(K);
    }
    table.defences.push_back(defences[d].label);
    table.probabilities.push_back(std::move(row));
  }
  return table;
}

template <class Defence, class Hyper>
AttackPolicyTable solve_attacker_distribution(const AttackerProblem<Defence, Hyper>& problem,
                                              const std::vector<Labelled<Defence>>& defences,
                                              std::int64_t k_draws, std::int64_t m_inner,
                                              const stoch::RngStream& rng,
                                              const Execution& exec = {}) {
  return solve_attacker_distribution(problem, std::span<const Labelled<Defence>>(defences),
                                     k_draws, m_inner, rng, exec);
}

}  // namespace ara
