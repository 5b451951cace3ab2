#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "emoreact/affect.hpp"

namespace emoreact::topics {

// A normalized post positioned on the day grid with its affect labels.
struct TaggedDoc {
    std::string post_id;
    std::size_t day = 0;
    CategorySet categories;
    std::vector<std::string> tokens;
};

struct WindowPair {
    std::vector<const TaggedDoc*> before;  // days [t-3, t-1]
    std::vector<const TaggedDoc*> after;   // days [t, t+2]
    bool clipped = false;                  // some window day lies outside the corpus
};

struct TopicsConfig {
    std::size_t window_days = 3;
    std::optional<double> prior_weight;  // alpha; 0.01 * (A + B) / |V| when unset
    double z_min = 1.96;
    double co_threshold = 0.3;
    std::size_t max_clusters = 10;
    std::size_t max_members = 5;
    std::size_t max_exemplars = 3;

    void validate() const;
};

class StopwordList {
public:
    StopwordList() = default;
    static StopwordList load(std::istream& source);
    static StopwordList load_file(const std::filesystem::path& path);
    void add(std::string word) { words_.insert(std::move(word)); }
    bool contains(const std::string& word) const { return words_.count(word) != 0; }
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

// Docs carrying `category` from the windows around day t. `n_days` is the
// corpus length; window days outside [0, n_days) set the clipped flag.
WindowPair window_docs(std::span<const TaggedDoc> docs, Category category, std::size_t t,
                       std::size_t n_days, const TopicsConfig& config = {});

struct SalientTerm {
    std::string term;
    double z = 0.0;
    std::size_t after_freq = 0;
    std::size_t before_freq = 0;
};

// Log-odds ratio with a symmetric Dirichlet prior, after vs before, ranked
// by z (descending, then term). Stopwords are dropped after scoring.
// Throws DataError("nothing to explain") when the after window has no tokens.
std::vector<SalientTerm> salience(const WindowPair& pair, const StopwordList& stopwords,
                                  std::optional<double> prior_weight = std::nullopt);

// The same pair with before and after exchanged.
WindowPair swapped(const WindowPair& pair);

struct TopicCluster {
    std::vector<std::string> members;
    double score = 0.0;  // max member z
    std::vector<std::string> exemplars;
};

// Greedy co-occurrence grouping of the terms with z > z_min. A term joins a
// cluster only if, for every current member m, at least co_threshold of m's
// docs also contain the term.
std::vector<TopicCluster> cluster_terms(std::span<const SalientTerm> ranked,
                                        std::span<const TaggedDoc* const> docs,
                                        const TopicsConfig& config = {});

struct ExplanationReport {
    Category category{};
    std::size_t day = 0;
    std::vector<TopicCluster> before_topics;
    std::vector<TopicCluster> after_topics;
    std::vector<TopicCluster> emergent;
    std::vector<std::string> notes;
};

// After clusters sharing no member with any before cluster are emergent.
ExplanationReport emerging(std::vector<TopicCluster> before, std::vector<TopicCluster> after);

// window_docs -> salience (both directions) -> cluster_terms -> emerging.
// Data problems become notes on the report.
ExplanationReport explain(std::span<const TaggedDoc> docs, Category category, std::size_t t,
                          std::size_t n_days, const StopwordList& stopwords,
                          const TopicsConfig& config = {});

} // namespace emoreact::topics
