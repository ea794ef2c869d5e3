#pragma once

#include <vector>

#include "optimem/stats.hpp"

namespace optimem {

/// rho(t) = (1+P)^-t, the declining pure-rate-of-time-preference curve.
double prtp_rho(double p, double t);

/// delta = eta*g + (1+P)^-t
double amended_ramsay(double eta, double g, double p, double t);

/// Solve P such that the mean of rho over t = 0..horizon equals target_mean.
double solve_p_mean_rho(double target_mean, int horizon);

/// Solve (1+P)^-t = target in closed form.
double solve_p_point_rho(double target, double t);

/// Integral of (1+P)^-t over [t0, t1] plus an optional constant floor.
double prtp_area(double p, double t0, double t1, double floor = 0.0);

/// Solve P such that prtp_area(P, t0, t1, floor) equals target_area.
double solve_p_for_area(double target_area, double t0, double t1, double floor = 0.0);

/// Fitted Green Book declining PRTP, floored at zero.
double greenbook_prtp(double t);
double greenbook_zero_crossing();

struct RiskAdjustedRate {
    double r_df = 0.0;      // ratio of the upper rate to the base rate
    double adjusted = 0.0;  // base divided by the multiplier (losses lower the rate)
};
RiskAdjustedRate risk_adjusted_loss_rate(double d_upper, double d_base);

struct MonthlySeries {
    int start_year = 0;
    int start_month = 1;  // 1..12
    std::vector<double> values;
};

/// Inflation-corrected rates net of the inflation-corrected federal funds rate.
/// cpi_index must cover at least the 12 months preceding each rate sample.
MonthlySeries tbill_real_rates(const MonthlySeries& nominal, const MonthlySeries& cpi_index,
                               const MonthlySeries& fedfunds);

/// occupied*e_d / (reserve - occupied)
double wtp_fraction(double occupied_ha, double reserve_ha, double e_d);

/// e_num/(1-e_den): the planetary-scale variant where hectares cancel.
double wtp_globe(double e_num, double e_den);

}  // namespace optimem
