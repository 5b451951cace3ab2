#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emoreact/affect.hpp"
#include "emoreact/calendar.hpp"
#include "emoreact/changepoint.hpp"
#include "emoreact/corpus.hpp"

namespace emoreact::eval {

enum class EventKind { shift, spike };
std::string_view event_kind_name(EventKind k);

struct InjectedEvent {
    std::size_t day = 0;
    EventKind kind = EventKind::shift;
    std::vector<Category> categories;
    double multiplier = 1.5;
    std::size_t duration = 1;  // spike only
    std::vector<std::string> burst_terms;
    double attach_probability = 0.3;
    std::size_t burst_days = 3;  // burst terms attach on [day, day + burst_days)

    bool active_on(std::size_t d) const {
        if (d < day) return false;
        return kind == EventKind::shift || d < day + duration;
    }
    bool bursting_on(std::size_t d) const { return d >= day && d < day + burst_days; }
};

struct SyntheticConfig {
    Date start_day = Date{std::chrono::days{0}};
    TimeZone zone;
    std::size_t n_days = 210;
    double posts_per_day = 2000.0;       // Poisson mean
    std::size_t tokens_per_post = 6;      // background tokens per post
    std::array<double, kCategoryCount> base_probability{};
    std::vector<std::pair<std::string, double>> background;  // word, weight
    std::vector<InjectedEvent> events;

    SyntheticConfig();  // every base probability 0.05, generated background
};

// Deterministic pseudo-word vocabulary with Zipf(1) weights.
std::vector<std::pair<std::string, double>> default_background(std::size_t size = 400);

struct GroundTruth {
    Date start_day;
    std::size_t n_days = 0;
    std::vector<InjectedEvent> events;
};

struct SimulatedCorpus {
    std::vector<corpus::Post> posts;
    GroundTruth truth;
};

// Category probability on a day: base times every active event multiplier.
double category_probability(const SyntheticConfig& config, Category c, std::size_t day);

// Throws ConfigError for invalid configs, including probabilities that reach
// 1 after multipliers and background or burst words that are lexicon terms.
void validate(const SyntheticConfig& config, const affect::Lexicon& lexicon);

// Each day draws its own engine from derive(seed, day). Posts carry the
// injected categories as prelabels.
SimulatedCorpus simulate(const SyntheticConfig& config, const affect::Lexicon& lexicon,
                         std::uint64_t seed);

void write_truth(std::ostream& out, const GroundTruth& truth);
GroundTruth read_truth(std::istream& in);
GroundTruth read_truth_file(const std::filesystem::path& path);

struct EventMatch {
    std::size_t event_index = 0;
    CategorySet detecting;
    std::size_t detections = 0;
};

struct MatchResult {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tolerance_days = 3;
    std::vector<EventMatch> per_event;               // one entry per ground-truth event
    std::vector<std::ptrdiff_t> assignment;          // per change point; -1 = false positive
};

// A change point matches the nearest event (earlier event on ties) whose
// affected categories include its category and that lies within tolerance.
MatchResult match(std::span<const changepoint::ChangePoint> change_points,
                  std::span<const InjectedEvent> events, std::size_t tolerance_days = 3);

// TP / (TP + FP). Throws DataError("precision undefined") with no detections.
double precision(const MatchResult& m);

// Mean over detected events of |detecting categories|, divided by 21.
// Throws DataError("DERate undefined") when no event was detected.
double derate(const MatchResult& m);

} // namespace emoreact::eval
