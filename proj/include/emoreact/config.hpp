#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "emoreact/affect.hpp"
#include "emoreact/calendar.hpp"
#include "emoreact/changepoint.hpp"
#include "emoreact/eval.hpp"
#include "emoreact/magnitude.hpp"
#include "emoreact/topics.hpp"

namespace emoreact {

// Values given on the command line; they win over the config file.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<affect::LabelMode> mode;
    std::optional<std::filesystem::path> output_dir;
    std::optional<std::filesystem::path> truth;
    std::optional<std::filesystem::path> posts;
};

struct RunConfig {
    StudyWindow study;
    std::uint64_t seed = 0;

    std::filesystem::path posts_path;
    affect::LabelMode mode = affect::LabelMode::lexicon;
    std::optional<std::filesystem::path> truth_path;
    std::filesystem::path lexicon_path;
    std::filesystem::path emoji_path;
    std::filesystem::path stopwords_path;
    std::filesystem::path output_dir;

    double threshold = 0.5;
    changepoint::CusumConfig cusum;
    changepoint::BocpdConfig bocpd;
    magnitude::MagnitudeConfig magnitude;
    topics::TopicsConfig topics;
    std::size_t match_tolerance_days = 3;
    eval::SyntheticConfig synthetic;

    // Effective settings after overrides, minus the output directory.
    nlohmann::json effective;
    std::string config_hash() const;
};

// Directory holding the shipped lexicon, emoji and stopword tables.
std::filesystem::path default_data_dir();

// Relative paths in the file are resolved against the file's directory.
// Unknown keys are rejected. The output directory falls back to the
// EMOREACT_OUT environment variable, then to "out" next to the config.
RunConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});
RunConfig parse_config(const nlohmann::json& tree, const std::filesystem::path& base_dir,
                       const Overrides& overrides = {});

} // namespace emoreact
