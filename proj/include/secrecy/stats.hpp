#pragma once

#include <functional>
#include <span>
#include <vector>

namespace secrecy::stats {

/// One-sample Kolmogorov-Smirnov statistic sup |F_n(x) - F(x)|.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// 5%-level critical value 1.36 / sqrt(n) of the asymptotic KS distribution.
double ks_critical_5pct(std::size_t n);

struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased
  double std_error = 0.0; ///< of the mean
};

SampleMoments moments(std::span<const double> samples);

}  // namespace secrecy::stats
