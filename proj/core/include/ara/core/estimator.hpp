#pragma once

#include <cstddef>
#include <cstdint>

#include "ara/core/parallel.hpp"
#include "ara/core/problem.hpp"

namespace ara {

// Stream labels; sample j of any evaluation uses rng.derive({kSampleStream, j}).
inline constexpr std::uint64_t kSampleStream = 0x5341;

/// Monte Carlo estimate of the expected utility of decision `decision`.
///
/// Sample j draws from rng.derive({kSampleStream, j}), independent of the
/// decision index, so two decisions evaluated with the same `rng` see common
/// random numbers. The result is bit-identical for any thread count.
EvaluationResult estimate_expected_utility(const DefenderProblem& problem, std::size_t decision,
                                           const AttackPolicyTable& attack_table, std::int64_t n,
                                           const stoch::RngStream& rng,
                                           const Execution& exec = {});

/// psi_n - psi_r: utility lost relative to the no-threat baseline.
double utility_loss(const EvaluationResult& psi_n, const EvaluationResult& psi_r) noexcept;

}  // namespace ara
