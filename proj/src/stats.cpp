#include "secrecy/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace secrecy::stats {

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_5pct(std::size_t n) { return 1.36 / std::sqrt(static_cast<double>(n)); }

SampleMoments moments(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("moments: no samples");
  SampleMoments m;
  const double n = static_cast<double>(samples.size());
  for (double x : samples) m.mean += x;
  m.mean /= n;
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - m.mean) * (x - m.mean);
    m.variance = ss / (n - 1.0);
    m.std_error = std::sqrt(m.variance / n);
  }
  return m;
}

}  // namespace secrecy::stats
