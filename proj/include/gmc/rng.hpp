#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace gmc {

/// Seeded, stream-indexed random source. Identical (seed, stream) pairs
/// reproduce identical draws; distinct streams are independent for practical
/// purposes. Parallel code derives one stream per sample index, so results
/// do not depend on how samples are partitioned across workers.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [a, b).
  double uniform(double a, double b);
  /// Standard normal.
  double normal();
  /// Standard exponential (mean 1).
  double exponential();
  /// Standard complex normal: independent N(0,1) real and imaginary parts.
  std::complex<double> complex_normal();

  std::uint64_t raw() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace gmc
