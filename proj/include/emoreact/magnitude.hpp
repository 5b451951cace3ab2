#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emoreact/affect.hpp"
#include "emoreact/changepoint.hpp"

namespace emoreact::magnitude {

inline constexpr double kBaselineEpsilon = 1e-9;

struct MagnitudeConfig {
    std::size_t baseline_days = 14;     // window before t, t excluded
    std::size_t short_days = 14;        // window [t, t + short_days)
    std::size_t long_center = 14;       // long-term window is centred here
    std::size_t long_half_width = 2;    // -> days [t+12, t+16] by default

    void validate() const;
};

struct Baseline {
    double value = 0.0;
    bool partial = false;
};

struct ShortTerm {
    double pct = 0.0;
    std::size_t extremum_day = 0;
    bool partial = false;
};

struct LongTerm {
    double pct = 0.0;
    bool partial = false;
};

// Mean over [t - baseline_days, t - 1], clipped at the series start.
// Throws DataError("no baseline window") when t == 0.
Baseline baseline(std::span<const double> series, std::size_t t, const MagnitudeConfig& config = {});

// Percent change from the baseline to the max (peak) or min (dip) of
// [t, t + short_days - 1]. Throws DataError for a baseline <= 1e-9.
ShortTerm short_term(std::span<const double> series, std::size_t t, changepoint::Direction direction,
                     double baseline_value, const MagnitudeConfig& config = {});

// Percent change from the baseline to the mean of
// [t + long_center - long_half_width, t + long_center + long_half_width],
// clipped at the series end. Throws DataError("no long-term window") when the
// series ends before the window starts.
LongTerm long_term(std::span<const double> series, std::size_t t, double baseline_value,
                   const MagnitudeConfig& config = {});

struct MagnitudeReport {
    Category category{};
    std::size_t day = 0;
    std::optional<double> baseline;
    std::optional<double> short_pct;
    std::optional<std::size_t> short_extremum_day;
    std::optional<double> long_pct;
    bool partial_window = false;
    std::vector<std::string> notes;
};

// Never throws on data problems; failures become notes on the report.
MagnitudeReport measure(std::span<const double> series, const changepoint::ChangePoint& cp,
                        const MagnitudeConfig& config = {});

} // namespace emoreact::magnitude
