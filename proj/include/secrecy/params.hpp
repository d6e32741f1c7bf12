#pragma once

#include <optional>
#include <string>

namespace secrecy {

/// Receiver SNR model. Either the high-SNR approximation (an explicit mode, not a
/// large number) or a finite linear ratio P_BS / sigma^2 measured at unit distance.
class SnrModel {
 public:
  static SnrModel high() noexcept { return SnrModel{}; }
  /// Throws std::domain_error unless linear_ratio > 0.
  static SnrModel linear(double linear_ratio);
  static SnrModel from_db(double db);

  bool is_high() const noexcept { return !linear_.has_value(); }
  /// Throws std::logic_error in high-SNR mode.
  double linear_ratio() const;
  std::string describe() const;

 private:
  std::optional<double> linear_;
};

/// Densities, path-loss exponent and SNR model of the downlink network.
/// Densities are absolute (points per unit area); nothing is normalized to lambda_bs = 1.
class NetworkParams {
 public:
  /// Throws std::domain_error unless both densities are positive and alpha > 2.
  NetworkParams(double lambda_bs, double lambda_e, double alpha, SnrModel snr = SnrModel::high());

  double lambda_bs() const noexcept { return lambda_bs_; }
  double lambda_e() const noexcept { return lambda_e_; }
  double alpha() const noexcept { return alpha_; }
  const SnrModel& snr() const noexcept { return snr_; }
  /// lambda_bs / lambda_e
  double density_ratio() const noexcept { return lambda_bs_ / lambda_e_; }

  NetworkParams with_lambda_e(double lambda_e) const;
  NetworkParams with_alpha(double alpha) const;
  NetworkParams with_snr(SnrModel snr) const;

 private:
  double lambda_bs_;
  double lambda_e_;
  double alpha_;
  SnrModel snr_;
};

/// Secrecy-rate threshold R_0 in bits per channel use; beta = 2^{R_0}.
class Threshold {
 public:
  /// Throws std::domain_error unless r0 >= 0 (infinity allowed for limits).
  explicit Threshold(double r0);

  double r0() const noexcept { return r0_; }
  double beta() const noexcept;

 private:
  double r0_;
};

}  // namespace secrecy
