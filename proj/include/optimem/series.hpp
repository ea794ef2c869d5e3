#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace optimem {

enum class Unit {
    GtC,
    GtCO2,
    ppm,
    ppb,
    ppt,
    Wm2,
    degC,
    ZJ,
    USD,
    fraction,
};

std::string unit_name(Unit u);
Unit unit_from_name(const std::string& name);

/// Year-indexed sequence of doubles with contiguous yearly spacing.
class YearSeries {
public:
    YearSeries(int start_year, std::vector<double> values, Unit unit)
        : start_(start_year), values_(std::move(values)), unit_(unit) {
        if (values_.empty())
            throw std::invalid_argument("YearSeries: empty series");
    }

    int start_year() const { return start_; }
    int end_year() const { return start_ + static_cast<int>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }
    Unit unit() const { return unit_; }

    bool covers(int year) const { return year >= start_ && year <= end_year(); }

    double at(int year) const {
        if (!covers(year))
            throw std::out_of_range("YearSeries: year " + std::to_string(year) +
                                    " outside [" + std::to_string(start_) + ", " +
                                    std::to_string(end_year()) + "]");
        return values_[static_cast<std::size_t>(year - start_)];
    }

    double& at(int year) {
        if (!covers(year))
            throw std::out_of_range("YearSeries: year " + std::to_string(year) +
                                    " outside [" + std::to_string(start_) + ", " +
                                    std::to_string(end_year()) + "]");
        return values_[static_cast<std::size_t>(year - start_)];
    }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// Series restricted to [y0, y1], inclusive.
    YearSeries slice(int y0, int y1) const {
        if (y0 > y1 || !covers(y0) || !covers(y1))
            throw std::out_of_range("YearSeries::slice: bad window");
        std::vector<double> v(values_.begin() + (y0 - start_),
                              values_.begin() + (y1 - start_) + 1);
        return YearSeries(y0, std::move(v), unit_);
    }

private:
    int start_;
    std::vector<double> values_;
    Unit unit_;
};

}  // namespace optimem
