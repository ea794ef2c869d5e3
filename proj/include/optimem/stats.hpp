#pragma once

#include <utility>
#include <vector>

#include "optimem/series.hpp"

namespace optimem {

struct ExponentialFit {
    double c = 0.0;   // prefactor
    double m = 0.0;   // log-slope per year
    double r2 = 0.0;  // of the log-linear regression
};

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r2 = 0.0;
};

struct RateStats {
    double sigma = 0.0;  // sample standard deviation
    double mean = 0.0;
    double median = 0.0;
    double midrange = 0.0;  // (max+min)/2
    double max = 0.0;
    double min = 0.0;
    double skew = 0.0;      // adjusted Fisher-Pearson; 0 when degenerate
    double kurtosis = 0.0;  // sample excess kurtosis
    bool degenerate = false;
};

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

/// Least-squares fit of c*exp(m*x) via log-linear regression. All y must be > 0.
ExponentialFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y);

/// x = year - x_ref for each sample in the series.
ExponentialFit fit_exponential(const YearSeries& s, int x_ref);

/// R^2 of a fixed prediction against observations (no refit).
double r_squared(const std::vector<double>& predicted, const std::vector<double>& observed);

RateStats frequency_stats(std::vector<double> sample);

/// Chebyshev bound: fraction of any distribution within +/- k sigma.
double chebyshev_coverage(double k);

double mean(const std::vector<double>& v);
double sample_stddev(const std::vector<double>& v);

}  // namespace optimem
