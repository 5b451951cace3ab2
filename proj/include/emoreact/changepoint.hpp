#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "emoreact/affect.hpp"
#include "emoreact/error.hpp"

namespace emoreact::changepoint {

struct CusumConfig {
    std::size_t window_days = 28;
    std::size_t stride_days = 5;
    std::size_t n_bootstrap = 1000;
    std::uint64_t seed = 0;
    std::size_t merge_tolerance_days = 2;

    void validate() const;
};

struct BocpdConfig {
    double hazard_lambda = 30.0;
    std::optional<double> prior_mean;   // estimated from the first days when unset
    double prior_strength = 1.0;        // kappa0
    double prior_shape = 1.0;           // alpha0
    std::optional<double> prior_scale;  // beta0, estimated when unset
    std::size_t estimate_days = 14;
    std::size_t runlength_cap = 250;
    double report_floor = 0.1;

    void validate() const;
};

enum class Detector : std::uint8_t { cusum = 1, bocpd = 2 };
enum class Direction : std::uint8_t { peak, dip };

std::string_view detector_name(Detector d);
std::string_view direction_name(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

class DetectorSet {
public:
    DetectorSet() = default;
    explicit DetectorSet(Detector d) { insert(d); }
    void insert(Detector d) { bits_ |= static_cast<std::uint8_t>(d); }
    bool contains(Detector d) const { return (bits_ & static_cast<std::uint8_t>(d)) != 0; }
    bool empty() const { return bits_ == 0; }
    DetectorSet& operator|=(DetectorSet other) {
        bits_ |= other.bits_;
        return *this;
    }
    bool operator==(const DetectorSet&) const = default;
    std::vector<std::string_view> names() const;

private:
    std::uint8_t bits_ = 0;
};

struct Detection {
    Category category{};
    std::size_t day = 0;
    Detector detector = Detector::cusum;
    double confidence = 0.0;
    Direction direction = Direction::peak;
};

struct ChangePoint {
    Category category{};
    std::size_t day = 0;
    double confidence = 0.0;
    DetectorSet detectors;
    Direction direction = Direction::peak;
};

// ---- CUSUM ---------------------------------------------------------------

struct WindowResult {
    std::size_t cp_offset = 0;  // index of the first value after the shift
    double confidence = 0.0;
};

// Mean-shift CUSUM over one window with a permutation significance test.
// S_k = sum_{i<=k}(x_i - mean), cp_offset = argmax_k |S_k|, and confidence is
// the fraction of seeded permutations whose range max S - min S is below the
// observed one. Ranges within a relative 1e-9 of the observed range count as
// ties, not as "below". Requires at least 8 values.
WindowResult cusum_window(std::span<const double> values, std::size_t n_bootstrap,
                          std::uint64_t seed);

// Window start positions 0, stride, 2*stride, ... that fit in `length`.
std::vector<std::size_t> window_starts(std::size_t length, const CusumConfig& config);

// Slides cusum_window over the series (window seed = config.seed ^ start)
// and suppresses duplicates within merge_tolerance_days, keeping the most
// confident detection. Output is sorted by day.
std::vector<Detection> cusum_scan(std::span<const double> series, Category category,
                                  const CusumConfig& config, Diagnostics* diag = nullptr);

// ---- BOCPD ---------------------------------------------------------------

// Normal-inverse-gamma sufficient statistics for one run-length hypothesis.
struct NigParams {
    double mean;
    double kappa;
    double alpha;
    double beta;

    NigParams updated(double x) const;
    // Log density of the Student-t posterior predictive at x.
    double log_predictive(double x, bool* clamped = nullptr) const;
};

// Online run-length filter with constant hazard. After update(x_t) the
// posterior holds P(r_t = r | x_1..x_t) where r counts the observations that
// precede x_t in its segment; r = 0 means x_t opens a new segment.
class BocpdFilter {
public:
    BocpdFilter(NigParams prior, double hazard_lambda, std::size_t runlength_cap);

    // Returns P(r_t = 0 | x_1..x_t).
    double update(double x);
    std::vector<double> posterior() const;
    std::size_t steps() const { return steps_; }
    std::size_t clamp_events() const { return clamp_events_; }

private:
    NigParams prior_;
    double log_hazard_;
    double log_survival_;
    std::size_t cap_;
    std::size_t steps_ = 0;
    std::size_t clamp_events_ = 0;
    std::vector<double> log_post_;
    std::vector<NigParams> params_;  // params_[r] summarises the r previous observations
};

NigParams bocpd_prior(std::span<const double> series, const BocpdConfig& config,
                      Diagnostics* diag = nullptr);

// P(r_t = 0) for every t; entry 0 is 1 by construction.
std::vector<double> bocpd_changepoint_probabilities(std::span<const double> series,
                                                    const BocpdConfig& config,
                                                    Diagnostics* diag = nullptr);

// One Detection per day t >= 1 with P(r_t = 0) >= report_floor.
std::vector<Detection> bocpd_run(std::span<const double> series, Category category,
                                 const BocpdConfig& config, Diagnostics* diag = nullptr);

// ---- fusion --------------------------------------------------------------

// Peak when the mean of up to four days from t is at least the mean of up
// to three days before t, dip otherwise. Throws DataError for t == 0 or
// t >= series length.
Direction direction(std::span<const double> series, std::size_t t);

// Keeps detections with confidence >= threshold and collapses any within
// merge_tolerance_days of a more confident one (ties: earlier day, then
// cusum first). Output sorted by day.
std::vector<ChangePoint> fuse(std::span<const Detection> cusum, std::span<const Detection> bocpd,
                              std::span<const double> series, double threshold = 0.5,
                              std::size_t merge_tolerance_days = 2);

} // namespace emoreact::changepoint
