#include "optimem/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace optimem {

std::string unit_name(Unit u) {
    switch (u) {
        case Unit::GtC: return "GtC";
        case Unit::GtCO2: return "GtCO2";
        case Unit::ppm: return "ppm";
        case Unit::ppb: return "ppb";
        case Unit::ppt: return "ppt";
        case Unit::Wm2: return "Wm2";
        case Unit::degC: return "degC";
        case Unit::ZJ: return "ZJ";
        case Unit::USD: return "USD";
        case Unit::fraction: return "fraction";
    }
    return "?";
}

Unit unit_from_name(const std::string& name) {
    for (Unit u : {Unit::GtC, Unit::GtCO2, Unit::ppm, Unit::ppb, Unit::ppt, Unit::Wm2,
                   Unit::degC, Unit::ZJ, Unit::USD, Unit::fraction})
        if (unit_name(u) == name) return u;
    throw std::invalid_argument("unknown unit: " + name);
}

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_linear: need >= 2 paired points");
    const double n = static_cast<double>(x.size());
    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_linear: degenerate x");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    (void)n;
    return f;
}

ExponentialFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("fit_exponential: need >= 3 paired points");
    std::vector<double> ly(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] <= 0.0)
            throw std::domain_error("fit_exponential: non-positive value");
        ly[i] = std::log(y[i]);
    }
    const LinearFit lf = fit_linear(x, ly);
    ExponentialFit f;
    f.c = std::exp(lf.intercept);
    f.m = lf.slope;
    f.r2 = lf.r2;
    return f;
}

ExponentialFit fit_exponential(const YearSeries& s, int x_ref) {
    std::vector<double> x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        x[i] = static_cast<double>(s.start_year() + static_cast<int>(i) - x_ref);
    return fit_exponential(x, s.values());
}

double r_squared(const std::vector<double>& predicted, const std::vector<double>& observed) {
    if (predicted.size() != observed.size() || observed.size() < 2)
        throw std::invalid_argument("r_squared: size mismatch");
    const double my = mean(observed);
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        ss_res += (observed[i] - predicted[i]) * (observed[i] - predicted[i]);
        ss_tot += (observed[i] - my) * (observed[i] - my);
    }
    return ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
}

RateStats frequency_stats(std::vector<double> sample) {
    if (sample.size() < 2)
        throw std::invalid_argument("frequency_stats: need n >= 2");
    RateStats st;
    const double n = static_cast<double>(sample.size());
    st.mean = mean(sample);
    std::sort(sample.begin(), sample.end());
    st.min = sample.front();
    st.max = sample.back();
    st.midrange = 0.5 * (st.max + st.min);
    const std::size_t h = sample.size() / 2;
    st.median = sample.size() % 2 ? sample[h] : 0.5 * (sample[h - 1] + sample[h]);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : sample) {
        const double d = x - st.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    st.sigma = std::sqrt(m2 / (n - 1.0));
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (m2 <= 0.0) {
        st.degenerate = true;  // constant sample: skew/kurtosis reported as 0
        return st;
    }
    const double g1 = m3 / std::pow(m2, 1.5);
    st.skew = n < 3 ? 0.0 : g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
    st.kurtosis = m4 / (m2 * m2) - 3.0;
    return st;
}

double chebyshev_coverage(double k) {
    if (k <= 1.0) return 0.0;
    return 1.0 - 1.0 / (k * k);
}

}  // namespace optimem
