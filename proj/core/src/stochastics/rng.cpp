#include "ara/stochastics/rng.hpp"

#include <bit>

namespace ara::stoch {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix_next(std::uint64_t& state) noexcept {
  state += kGolden;
  return mix64(state);
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id) {
  std::uint64_t sm = mix64(seed ^ mix64(stream_id + kGolden));
  for (auto& word : state_) word = splitmix_next(sm);
  // xoshiro must not start from the all-zero state.
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = kGolden;
}

RngStream RngStream::derive(std::initializer_list<std::uint64_t> labels) const noexcept {
  std::uint64_t id = stream_id_;
  for (std::uint64_t label : labels) {
    id = mix64(id ^ mix64(label * kGolden + 0x632be59bd9b4e019ULL));
  }
  return RngStream(seed_, id);
}

RngStream::result_type RngStream::operator()() noexcept {
  const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = std::rotl(state_[3], 45);
  return result;
}

double RngStream::uniform01() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

}  // namespace ara::stoch
