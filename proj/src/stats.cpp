#include "gmc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmc {

void SampleStats::add(double x) {
  if (count_ == 0) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  ++count_;
  double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void SampleStats::merge(const SampleStats& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  double na = static_cast<double>(count_);
  double nb = static_cast<double>(other.count_);
  double n = na + nb;
  double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
  min_ = std::min(min_, other.min_);
  max_ = std::max(max_, other.max_);
}

double SampleStats::mean() const {
  if (count_ == 0) throw std::logic_error("SampleStats: empty accumulator");
  return mean_;
}

double SampleStats::variance() const {
  if (count_ < 2) return 0.0;
  return m2_ / static_cast<double>(count_ - 1);
}

double SampleStats::stddev() const { return std::sqrt(variance()); }

double SampleStats::std_error() const {
  if (count_ == 0) return 0.0;
  return stddev() / std::sqrt(static_cast<double>(count_));
}

double SampleStats::min() const {
  if (count_ == 0) throw std::logic_error("SampleStats: empty accumulator");
  return min_;
}

double SampleStats::max() const {
  if (count_ == 0) throw std::logic_error("SampleStats: empty accumulator");
  return max_;
}

Histogram::Histogram(double lo, double hi, int bins) : lo_(lo), hi_(hi) {
  if (!(hi > lo) || bins < 1) throw std::invalid_argument("Histogram: bad range");
  counts_.assign(static_cast<std::size_t>(bins), 0);
}

void Histogram::add(double x) {
  int b = static_cast<int>((x - lo_) / (hi_ - lo_) * bins());
  b = std::clamp(b, 0, bins() - 1);
  ++counts_[static_cast<std::size_t>(b)];
  ++total_;
}

void Histogram::merge(const Histogram& other) {
  if (counts_.empty()) {
    *this = other;
    return;
  }
  if (other.bins() != bins() || other.lo_ != lo_ || other.hi_ != hi_)
    throw std::invalid_argument("Histogram: merging incompatible histograms");
  for (int i = 0; i < bins(); ++i) counts_[static_cast<std::size_t>(i)] += other.counts_[static_cast<std::size_t>(i)];
  total_ += other.total_;
}

double Histogram::bin_center(int bin) const {
  double w = (hi_ - lo_) / bins();
  return lo_ + (bin + 0.5) * w;
}

std::vector<double> Histogram::mass() const {
  std::vector<double> out(counts_.size(), 0.0);
  if (total_ == 0) return out;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    out[i] = static_cast<double>(counts_[i]) / static_cast<double>(total_);
  return out;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double c = cdf(samples[i]);
    double lo = static_cast<double>(i) / n;
    double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(std::abs(c - lo), std::abs(hi - c)));
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: no samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double na = static_cast<double>(a.size());
  double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical(double alpha, std::size_t n) {
  double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  return c / std::sqrt(static_cast<double>(n));
}

double ks_two_sample_critical(double alpha, std::size_t na, std::size_t nb) {
  double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);
  double m = static_cast<double>(na);
  double n = static_cast<double>(nb);
  return c * std::sqrt((m + n) / (m * n));
}

}  // namespace gmc
