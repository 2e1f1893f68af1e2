#pragma once

#include <cstdint>
#include <random>

namespace bayesreg {

/// Seeded pseudo-random stream. Identical (seed, stream_id) pairs reproduce
/// identical draw sequences. Each chain or Monte Carlo block owns one stream;
/// substreams are derived by fixed arithmetic on the pair.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Child stream `k` of this stream, independent of this stream's position.
  RngStream substream(std::uint64_t k) const;

  /// Uniform on the open interval (0, 1).
  double uniform();
  double normal();
  /// Gamma with the given shape and rate (mean shape / rate).
  double gamma(double shape, double rate);
  double exponential(double rate);
  bool bernoulli(double p);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64 finalizer, used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace bayesreg
