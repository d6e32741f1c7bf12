#include "secrecy/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace secrecy {

SnrModel SnrModel::linear(double linear_ratio) {
  if (!(linear_ratio > 0.0) || !std::isfinite(linear_ratio)) {
    throw std::domain_error("SNR must be a positive finite linear ratio");
  }
  SnrModel m;
  m.linear_ = linear_ratio;
  return m;
}

SnrModel SnrModel::from_db(double db) {
  if (!std::isfinite(db)) throw std::domain_error("SNR in dB must be finite");
  return linear(std::pow(10.0, db / 10.0));
}

double SnrModel::linear_ratio() const {
  if (!linear_) throw std::logic_error("high-SNR mode has no finite linear ratio");
  return *linear_;
}

std::string SnrModel::describe() const {
  if (!linear_) return "high-snr";
  std::ostringstream os;
  os << "snr_db=" << 10.0 * std::log10(*linear_);
  return os.str();
}

NetworkParams::NetworkParams(double lambda_bs, double lambda_e, double alpha, SnrModel snr)
    : lambda_bs_(lambda_bs), lambda_e_(lambda_e), alpha_(alpha), snr_(snr) {
  if (!(lambda_bs > 0.0) || !std::isfinite(lambda_bs)) {
    throw std::domain_error("lambda_bs must be positive and finite");
  }
  if (!(lambda_e > 0.0) || !std::isfinite(lambda_e)) {
    throw std::domain_error("lambda_e must be positive and finite");
  }
  if (!(alpha > 2.0) || !std::isfinite(alpha)) {
    throw std::domain_error("path-loss exponent alpha must exceed 2");
  }
}

NetworkParams NetworkParams::with_lambda_e(double lambda_e) const {
  return NetworkParams(lambda_bs_, lambda_e, alpha_, snr_);
}

NetworkParams NetworkParams::with_alpha(double alpha) const {
  return NetworkParams(lambda_bs_, lambda_e_, alpha, snr_);
}

NetworkParams NetworkParams::with_snr(SnrModel snr) const {
  return NetworkParams(lambda_bs_, lambda_e_, alpha_, snr);
}

Threshold::Threshold(double r0) : r0_(r0) {
  if (!(r0 >= 0.0)) throw std::domain_error("threshold R_0 must be non-negative");
}

double Threshold::beta() const noexcept { return std::exp2(r0_); }

}  // namespace secrecy
