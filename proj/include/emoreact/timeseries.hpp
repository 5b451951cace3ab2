#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "emoreact/affect.hpp"
#include "emoreact/calendar.hpp"

namespace emoreact::timeseries {

struct DailyGrid {
    Date first_day;
    std::string timezone = "UTC";
    std::vector<std::uint32_t> totals;  // N_d, all posts that day

    std::size_t length() const { return totals.size(); }
    Date date_at(std::size_t day) const { return first_day + std::chrono::days(day); }
};

// Per-day fraction of posts carrying one category. values[d] is empty
// exactly when the grid has no posts on day d.
struct AffectSeries {
    Category category{};
    std::vector<std::optional<double>> values;
    std::vector<std::uint32_t> counts;
};

struct Aggregation {
    DailyGrid grid;
    std::array<AffectSeries, kCategoryCount> series;  // indexed by index_of(category)

    const AffectSeries& of(Category c) const { return series[index_of(c)]; }
};

// Throws DataError if a post falls outside the window; ConfigError for an
// empty window.
Aggregation aggregate(std::span<const affect::LabeledPost> labeled, const StudyWindow& window);

struct DenseSeries {
    Category category{};
    std::vector<double> values;
    std::vector<bool> imputed;
};

// Interior gaps are interpolated linearly, leading and trailing gaps copy
// the nearest observation. Throws DataError with fewer than two observed days.
DenseSeries fill_missing(const AffectSeries& series);

// CSV with header "date,total,<cat>_count,<cat>_frac,..." in canonical
// category order. Missing fractions are empty fields.
void write_series_csv(std::ostream& out, const Aggregation& aggregation);
void write_series_csv_file(const std::filesystem::path& path, const Aggregation& aggregation);
Aggregation read_series_csv(std::istream& in);
Aggregation read_series_csv_file(const std::filesystem::path& path);

} // namespace emoreact::timeseries
