#pragma once

#include <span>

#include "secrecy/params.hpp"
#include "secrecy/specfun.hpp"

/// Closed-form secrecy-rate distributions of the typical downlink user under the
/// high-SNR approximation. Rates are in bits per channel use.
namespace secrecy::analytic {

/// 1 - e^{-x} without cancellation for small x.
double one_minus_exp_neg(double x) noexcept;

// Full location information, nearest BS serves.
double ccdf_s1(const NetworkParams& p, const Threshold& t);
double mean_s1(const NetworkParams& p);

// Full location information, best BS serves.
/// PGFL/Jensen upper bound on the CCDF.
double ccdf_s2_upper_pgfl(const NetworkParams& p, const Threshold& t);
/// Nearest-BS association is always available, so the nearest-BS law is a lower bound.
double ccdf_s2_lower(const NetworkParams& p, const Threshold& t);
/// Upper bound from shrinking the eavesdropper Voronoi cell of the origin by
/// 4/(1 + beta^{1/alpha})^2, with the cell area drawn from `law`.
double ccdf_s2_upper_voronoi(const NetworkParams& p, const Threshold& t,
                             const specfun::CellAreaLaw& law = {});
/// Same bound with the expectation over the normalized cell area taken as a sample
/// average over `normalized_areas` (lambda_e * A). Lets the gamma fit be checked
/// against simulated cells.
double ccdf_s2_upper_voronoi_sampled(const NetworkParams& p, const Threshold& t,
                                     std::span<const double> normalized_areas);
/// Coverage probability at R_0 = 0, where the shrink factor is 1 and the bound is exact.
double coverage_s2_exact_r0zero(const NetworkParams& p, const specfun::CellAreaLaw& law = {});
double mean_s2_upper(const NetworkParams& p);
double mean_s2_lower(const NetworkParams& p);
/// Numerical integral over R_0 of ccdf_s2_upper_voronoi. No closed form exists.
double mean_s2_voronoi_approx(const NetworkParams& p, const specfun::CellAreaLaw& law = {});

// Nearest BS serves, only intracell eavesdroppers known.
double ccdf_s3_cell_lower(const NetworkParams& p, const Threshold& t);
double mean_s3_cell_lower(const NetworkParams& p);

// Nearest BS serves, eavesdroppers known within detection radius d0 of it.
double ccdf_s3_radius(const NetworkParams& p, const Threshold& t, double d0);
/// Requires d0 > 0 (domain error otherwise).
double mean_s3_radius(const NetworkParams& p, double d0);

/// Density of the distance from the typical user to its nearest BS.
double ru_pdf(const NetworkParams& p, double r);
/// P(D_min > r) for a typical BS.
double dmin_survival(const NetworkParams& p, double r);
double dmin_pdf(const NetworkParams& p, double r);

}  // namespace secrecy::analytic
