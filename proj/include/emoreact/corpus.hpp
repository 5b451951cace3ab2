#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emoreact/calendar.hpp"

namespace emoreact::corpus {

struct Post {
    std::string id;
    std::int64_t timestamp = 0;
    std::string text;
    // Category names supplied by an external classifier, when present.
    std::optional<std::vector<std::string>> prelabels;
    std::size_t line_no = 0;  // source line, 0 when not read from a file
};

struct Reject {
    std::size_t line_no = 0;
    std::string reason;
};

struct IngestResult {
    std::vector<Post> posts;
    std::vector<Reject> rejects;
};

// Reads one JSON object per line: {"id", "ts", "text", optional "labels"}.
// Bad lines never abort the read; each one lands in `rejects` so that
// posts.size() + rejects.size() equals the number of input lines.
IngestResult ingest(std::istream& source, const StudyWindow& window);
IngestResult ingest_file(const std::filesystem::path& path, const StudyWindow& window);

void write_post(std::ostream& out, const Post& post);
void write_reject_log(std::ostream& out, const std::vector<Reject>& rejects);

// Emoji codepoint sequence -> replacement words. File rows are
// "<hex codepoints separated by spaces>\t<name words>", '#' starts a comment.
class EmojiTable {
public:
    EmojiTable() = default;
    static EmojiTable load(std::istream& source);
    static EmojiTable load_file(const std::filesystem::path& path);

    void add(std::u32string sequence, std::vector<std::string> words);
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Longest entry that is a prefix of `text`; returns the matched length.
    std::size_t match(std::u32string_view text, const std::vector<std::string>** words) const;

private:
    std::map<std::u32string, std::vector<std::string>, std::less<>> entries_;
    std::size_t max_length_ = 0;
};

struct NormalizedDoc {
    std::string post_id;
    std::vector<std::string> tokens;
};

// Text preprocessing applied before labeling and topic extraction:
// NFC, URL and @-mention removal, hashtag splitting, emoji replacement,
// lowercasing, punctuation split. Total on arbitrary input bytes.
std::vector<std::string> normalize(std::string_view text, const EmojiTable& emoji);

inline NormalizedDoc normalize(const Post& post, const EmojiTable& emoji) {
    return {post.id, normalize(post.text, emoji)};
}

} // namespace emoreact::corpus
