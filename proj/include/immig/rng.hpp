#pragma once

#include <cmath>
#include <cstdint>

namespace immig {

/// Identifies one replicate's random stream. Streams are a pure function of
/// (master_seed, replicate_index, substream), so results do not depend on the
/// order in which replicates are executed or on the worker count.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t replicate_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

namespace detail {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-based generator: the n-th output is mix64(key + (n+1) * golden),
/// i.e. SplitMix64 with a key derived from the seed triple.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  constexpr CounterRng(SeedSpec seed, std::uint64_t substream = 0)
      : key_(derive_key(seed, substream)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  constexpr result_type operator()() {
    counter_ += detail::kGolden;
    return detail::mix64(key_ + counter_);
  }

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on (0, pi).
  double uniform_angle() { return uniform_open() * 3.14159265358979323846; }

  /// Unit-mean exponential.
  double exponential() { return -std::log(uniform_open()); }

  static constexpr std::uint64_t derive_key(SeedSpec seed,
                                            std::uint64_t substream) {
    std::uint64_t k = detail::mix64(seed.master_seed ^ 0x6a09e667f3bcc908ULL);
    k = detail::mix64(k ^ (seed.replicate_index * detail::kGolden + 1));
    k = detail::mix64(k ^ (substream * 0xd1b54a32d192ed03ULL + 7));
    return k;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Well-known substream ids used across the library.
namespace substream {
inline constexpr std::uint64_t kInterarrival = 1;
inline constexpr std::uint64_t kResponse = 2;
inline constexpr std::uint64_t kSubordinator = 3;
inline constexpr std::uint64_t kGeneric = 4;
/// Offset added to the arrival index for per-response streams.
inline constexpr std::uint64_t kResponseBase = 1ULL << 32;
}  // namespace substream

}  // namespace immig
