#include "bayesreg/rng.hpp"

#include <cmath>

namespace bayesreg {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(mix64(seed ^ mix64(stream_id))) {}

RngStream RngStream::substream(std::uint64_t k) const {
  return RngStream(seed_, mix64(stream_id_ * 0x100000001b3ULL + k + 1));
}

double RngStream::uniform() {
  // 53 random bits mapped to the open interval
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() { return normal_(engine_); }

double RngStream::gamma(double shape, double rate) {
  std::gamma_distribution<double> g(shape, 1.0 / rate);
  return g(engine_);
}

double RngStream::exponential(double rate) { return -std::log(uniform()) / rate; }

bool RngStream::bernoulli(double p) { return uniform() < p; }

}  // namespace bayesreg
