#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace ara::stoch {

/// A reproducible random stream identified by (seed, stream_id).
///
/// The generator is xoshiro256++ whose state is expanded from a hash of the
/// identity with SplitMix64, so constructing a stream is cheap and
/// sub-streams can be derived per decision, per hyper-draw or per sample.
/// Two streams with the same identity produce the same sequence no matter
/// which thread consumes them. A single stream is not thread-safe.
///
/// Satisfies std::uniform_random_bit_generator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Fresh stream whose id hashes this stream's id with `labels` in order.
  /// Derivation is pure: it does not advance this stream.
  RngStream derive(std::initializer_list<std::uint64_t> labels) const noexcept;
  RngStream derive(std::uint64_t label) const noexcept { return derive({label}); }

  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01() noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace ara::stoch
