#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emoreact/corpus.hpp"
#include "emoreact/error.hpp"

namespace emoreact {

// Eleven emotions followed by the ten moral-foundation poles
// (care/harm, fairness/cheating, loyalty/betrayal, authority/subversion,
// purity/degradation). The numeric order is the canonical output order.
enum class Category : std::uint8_t {
    anticipation, joy, love, trust, optimism, anger, disgust, fear, sadness, pessimism, surprise,
    care, harm, fairness, cheating, loyalty, betrayal, authority, subversion, purity, degradation,
};

inline constexpr std::size_t kCategoryCount = 21;
inline constexpr std::size_t kEmotionCount = 11;

const std::array<Category, kCategoryCount>& all_categories();
std::string_view category_name(Category c);
std::optional<Category> parse_category(std::string_view name);
inline std::size_t index_of(Category c) { return static_cast<std::size_t>(c); }
inline bool is_emotion(Category c) { return index_of(c) < kEmotionCount; }

class CategorySet {
public:
    CategorySet() = default;
    CategorySet(std::initializer_list<Category> cs) {
        for (auto c : cs) insert(c);
    }

    void insert(Category c) { bits_.set(index_of(c)); }
    bool contains(Category c) const { return bits_.test(index_of(c)); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    CategorySet& operator|=(const CategorySet& other) {
        bits_ |= other.bits_;
        return *this;
    }
    bool operator==(const CategorySet&) const = default;

    std::vector<Category> members() const;
    std::vector<std::string> names() const;

private:
    std::bitset<kCategoryCount> bits_;
};

} // namespace emoreact

namespace emoreact::affect {

class Lexicon {
public:
    void add(std::string term, Category c) { entries_[std::move(term)].insert(c); }
    const CategorySet* find(std::string_view term) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Terms whose only category is `c`, sorted.
    std::vector<std::string> exclusive_terms(Category c) const;

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
    };
    std::unordered_map<std::string, CategorySet, Hash, std::equal_to<>> entries_;
};

// Rows are "term,category"; '#' comment lines and a "term,category" header
// are skipped. Every bad row is collected and reported in one ConfigError.
// An empty lexicon is legal and produces a warning.
Lexicon load_lexicon(std::istream& source, Diagnostics& diag);
Lexicon load_lexicon_file(const std::filesystem::path& path, Diagnostics& diag);

// Union of the lexicon categories over all tokens.
CategorySet label(std::span<const std::string> tokens, const Lexicon& lexicon);

enum class LabelMode { lexicon, prelabeled };
std::optional<LabelMode> parse_label_mode(std::string_view text);
std::string_view label_mode_name(LabelMode mode);

struct LabeledPost {
    std::string post_id;
    std::int64_t timestamp = 0;
    CategorySet categories;
};

struct LabelOutcome {
    std::optional<LabeledPost> post;
    std::string reject_reason;  // set when post is empty
};

LabelOutcome resolve_labels(const corpus::Post& post, const corpus::NormalizedDoc& doc,
                            const Lexicon& lexicon, LabelMode mode);

} // namespace emoreact::affect
