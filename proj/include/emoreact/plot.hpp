#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "emoreact/calendar.hpp"
#include "emoreact/changepoint.hpp"
#include "emoreact/timeseries.hpp"

namespace emoreact::plot {

// SVG line chart of one daily fraction series with a labeled vertical
// marker (class "changepoint") per change point. Output depends only on the
// inputs.
std::string render_svg(const timeseries::DenseSeries& series, Date first_day,
                       std::span<const changepoint::ChangePoint> change_points);

void write_svg(const std::filesystem::path& path, const timeseries::DenseSeries& series,
               Date first_day, std::span<const changepoint::ChangePoint> change_points);

} // namespace emoreact::plot
