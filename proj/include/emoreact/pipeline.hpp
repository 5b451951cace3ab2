#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emoreact/affect.hpp"
#include "emoreact/config.hpp"
#include "emoreact/corpus.hpp"
#include "emoreact/error.hpp"
#include "emoreact/eval.hpp"
#include "emoreact/magnitude.hpp"
#include "emoreact/timeseries.hpp"
#include "emoreact/topics.hpp"

namespace emoreact::pipeline {

enum ExitCode : int { kSuccess = 0, kFatal = 1, kPartial = 2 };

struct Resources {
    affect::Lexicon lexicon;
    corpus::EmojiTable emoji;
    topics::StopwordList stopwords;
};

Resources load_resources(const RunConfig& config, Diagnostics& diag);

// ---- in-memory stages ----------------------------------------------------

struct LabelStage {
    std::vector<topics::TaggedDoc> docs;
    std::vector<affect::LabeledPost> labeled;
    std::vector<corpus::Reject> rejects;
};

LabelStage label_posts(std::span<const corpus::Post> posts, const StudyWindow& window,
                       const Resources& resources, affect::LabelMode mode, Diagnostics& diag);

// Dense versions of every category with at least two observed days.
std::array<std::optional<timeseries::DenseSeries>, kCategoryCount>
densify(const timeseries::Aggregation& aggregation, Diagnostics& diag);

struct DetectStage {
    std::vector<changepoint::Detection> detections;      // raw, ordered by category then day
    std::vector<changepoint::ChangePoint> change_points;  // fused, ordered by category then day
};

// Runs both detectors on every category (in parallel) and fuses them.
// Per-category seeds derive from `seed`, so output is schedule-independent.
DetectStage detect(const std::array<std::optional<timeseries::DenseSeries>, kCategoryCount>& dense,
                   const RunConfig& config, Diagnostics& diag);

std::vector<magnitude::MagnitudeReport>
measure_all(const std::array<std::optional<timeseries::DenseSeries>, kCategoryCount>& dense,
            std::span<const changepoint::ChangePoint> change_points, const RunConfig& config);

std::vector<topics::ExplanationReport> explain_all(std::span<const topics::TaggedDoc> docs,
                                                   std::span<const changepoint::ChangePoint> change_points,
                                                   std::size_t n_days, const topics::StopwordList& stopwords,
                                                   const RunConfig& config);

// ---- artifacts -------------------------------------------------------------

namespace files {
inline constexpr const char* posts = "posts.jsonl";
inline constexpr const char* truth = "truth.json";
inline constexpr const char* rejects = "rejects.log";
inline constexpr const char* labeled = "labeled.jsonl";
inline constexpr const char* series = "series.csv";
inline constexpr const char* detections = "detections.jsonl";
inline constexpr const char* change_points = "changepoints.jsonl";
inline constexpr const char* measurements = "measurements.jsonl";
inline constexpr const char* explanations = "explanations.jsonl";
inline constexpr const char* scorecard = "scorecard.json";
inline constexpr const char* report = "report.json";
inline constexpr const char* summary = "summary.txt";
inline constexpr const char* plots = "plots";
inline constexpr const char* logs = "logs";
} // namespace files

void write_tagged_docs(const std::filesystem::path& path, std::span<const topics::TaggedDoc> docs,
                       std::span<const affect::LabeledPost> labeled);
LabelStage read_tagged_docs(const std::filesystem::path& path);

void write_detections(const std::filesystem::path& path, std::span<const changepoint::Detection> detections,
                      Date first_day);
void write_change_points(const std::filesystem::path& path,
                         std::span<const changepoint::ChangePoint> change_points, Date first_day);
std::vector<changepoint::ChangePoint> read_change_points(const std::filesystem::path& path, Date first_day);

nlohmann::json scorecard_json(const eval::MatchResult& match, const eval::GroundTruth& truth,
                              Date first_day);

// ---- CLI stages --------------------------------------------------------------
// Each reads the previous stage's artifacts from the output directory and
// writes its own, plus logs/<stage>.log. Returns an ExitCode; fatal errors
// propagate as exceptions.

int stage_simulate(const RunConfig& config);
int stage_label(const RunConfig& config);
int stage_aggregate(const RunConfig& config);
int stage_detect(const RunConfig& config);
int stage_measure(const RunConfig& config);
int stage_explain(const RunConfig& config);
int stage_evaluate(const RunConfig& config);
int stage_plot(const RunConfig& config);
int stage_report(const RunConfig& config);

// label -> aggregate -> detect -> measure -> explain -> [evaluate] -> plot -> report
int run(const RunConfig& config);

} // namespace emoreact::pipeline
