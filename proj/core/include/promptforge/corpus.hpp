#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace promptforge {

/// One original user prompt with a stable identifier.
struct PromptRecord {
    std::string id;
    std::string prompt;

    friend bool operator==(const PromptRecord&, const PromptRecord&) = default;
};

enum class SplitTag { Train, Test };

struct PromptCorpus {
    std::vector<PromptRecord> records;
    SplitTag split_tag = SplitTag::Train;
    std::string corpus_id;  // content hash over records

    friend bool operator==(const PromptCorpus&, const PromptCorpus&) = default;
};

/// Loads a corpus from UTF-8 text (one prompt per line) or JSONL
/// {"id": str?, "prompt": str}; missing ids become the 0-based line number.
/// Duplicate ids are an error.
PromptCorpus load_corpus(const std::filesystem::path& path);

void save_corpus(const PromptCorpus& corpus, const std::filesystem::path& path);

struct IngestSummary {
    std::size_t lines_read = 0;
    std::size_t kept = 0;
    std::size_t duplicates_dropped = 0;
    std::size_t blank_dropped = 0;
    std::size_t train_count = 0;
    std::size_t test_count = 0;
    std::filesystem::path train_path;
    std::filesystem::path test_path;  // empty unless split_fraction < 1
};

/// Normalizes (trim, drop empties, dedup exact duplicates), assigns ids,
/// and writes corpus JSONL. With split_fraction < 1, writes disjoint
/// train/test files (seeded shuffle). Throws when no valid prompt survives.
IngestSummary ingest_corpus(const std::filesystem::path& input,
                            const std::filesystem::path& output_corpus, double split_fraction,
                            std::uint64_t seed);

/// Whitespace token count, used for rewrite-length metrics.
std::size_t token_count(const std::string& text);

} // namespace promptforge
