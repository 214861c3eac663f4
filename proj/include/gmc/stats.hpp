#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gmc {

/// Streaming moment accumulator (count, mean, unbiased variance, min, max).
/// Partial accumulators merge pairwise, so Monte Carlo loops can be split
/// across workers and combined in a fixed order.
class SampleStats {
 public:
  void add(double x);
  void merge(const SampleStats& other);

  std::int64_t count() const { return count_; }
  double mean() const;
  double variance() const;  // unbiased
  double stddev() const;
  double std_error() const;  // of the mean
  double min() const;
  double max() const;

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

/// Fixed-width histogram over [lo, hi); samples outside are clamped into the
/// edge bins. Counts are integers, so merging is exact in any order.
class Histogram {
 public:
  Histogram() = default;
  Histogram(double lo, double hi, int bins);

  void add(double x);
  void merge(const Histogram& other);

  int bins() const { return static_cast<int>(counts_.size()); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::int64_t total() const { return total_; }
  std::int64_t count(int bin) const { return counts_[bin]; }
  double bin_center(int bin) const;
  /// counts / total; sums to 1.
  std::vector<double> mass() const;

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

/// One-sample Kolmogorov-Smirnov statistic sup |F_emp - cdf|.
/// Samples need not be sorted.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

/// Two-sample KS statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Large-sample critical values: statistic above the value rejects at level
/// alpha. c(alpha) = sqrt(-ln(alpha/2)/2).
double ks_critical(double alpha, std::size_t n);
double ks_two_sample_critical(double alpha, std::size_t na, std::size_t nb);

}  // namespace gmc
