#include "gmc/rng.hpp"

namespace gmc {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed & 0xffffffffu),
      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream & 0xffffffffu),
      static_cast<std::uint32_t>(stream >> 32),
  };
  engine_.seed(seq);
}

double RngStream::uniform() {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

double RngStream::uniform(double a, double b) {
  std::uniform_real_distribution<double> dist(a, b);
  return dist(engine_);
}

double RngStream::normal() {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

double RngStream::exponential() {
  std::exponential_distribution<double> dist(1.0);
  return dist(engine_);
}

std::complex<double> RngStream::complex_normal() {
  double re = normal();
  double im = normal();
  return {re, im};
}

}  // namespace gmc
