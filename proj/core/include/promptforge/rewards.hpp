#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "promptforge/image.hpp"
#include "promptforge/tournament.hpp"

namespace promptforge {

class JudgeBackend;  // backends module; rewards only produces/consumes its payloads

/// The four judged reward dimensions. Each acts as one comparator (one
/// unit of K) in the tournament.
enum class RewardKind { Quality, GeneralAlignment, PhysicalAlignment, Aesthetics };

/// The two trained rewriter flavors and their reward compositions.
enum class RewriterKind { General, Aesthetics };

std::string_view to_string(RewardKind kind);
std::string_view to_string(RewriterKind kind);

/// Reward composition for a rewriter kind:
///   General    -> {Quality, GeneralAlignment, PhysicalAlignment}        (K=3)
///   Aesthetics -> {Quality, GeneralAlignment, PhysicalAlignment, Aesthetics} (K=4)
std::vector<RewardKind> dimensions_for(RewriterKind kind);

/// Same, minus an ablation exclusion list. Removing one dimension reduces
/// K by exactly one.
std::vector<RewardKind> dimensions_for(RewriterKind kind, std::span<const RewardKind> excluded);

/// Key questions extracted from a prompt (step 1 of general-alignment judging).
struct DecompositionResult {
    std::string source_prompt;
    std::vector<std::string> questions;
};

/// One pairwise judging job for a single reward dimension.
/// `questions` is present iff dimension == GeneralAlignment.
struct JudgeComparisonRequest {
    RewardKind dimension = RewardKind::Quality;
    std::string user_prompt;
    ImageHandle image_first;
    ImageHandle image_second;
    std::optional<DecompositionResult> questions;
};

struct JudgePolicy {
    int parse_retries = 2;  // re-submissions after an unparseable reply
    int question_cap = 10;  // max questions kept from a decomposition reply
};

/// Renders the authored instruction template for a dimension. Deterministic:
/// identical inputs produce byte-identical text. Throws std::invalid_argument
/// when questions are missing for GeneralAlignment or supplied for any other
/// dimension.
std::string render_judge_instruction(RewardKind dimension, const std::string& user_prompt,
                                     const std::optional<DecompositionResult>& questions);

/// Instruction for the decomposition step (question generation).
std::string render_decomposition_instruction(const std::string& user_prompt);

/// Version hash over all authored template texts; persisted alongside every
/// triplet so results stay attributable to the exact wording used.
const std::string& judge_template_hash();

/// Parses the constrained verdict token from a raw judge reply: the final
/// non-empty line, whitespace-trimmed and case-folded, must be exactly one
/// of FIRST / SECOND / TIE. Anything else is a parse failure (nullopt);
/// there is no silent default.
std::optional<Verdict> parse_verdict_token(std::string_view reply);

/// Decomposition cache keyed by (prompt, template version) with
/// single-flight semantics: concurrent lookups for one prompt trigger a
/// single backend call.
class DecompositionCache {
public:
    DecompositionResult get_or_decompose(const std::string& prompt, JudgeBackend& judge,
                                         const JudgePolicy& policy = {});
    std::size_t backend_calls() const;

private:
    struct Slot;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Slot>> slots_;
    std::size_t backend_calls_ = 0;
};

/// Step 1 of general-alignment judging: asks the judge backend for the key
/// yes/no questions of `prompt` and parses its structured (JSON) reply.
/// Cached per (prompt, template version) via `cache`.
DecompositionResult decompose_prompt(const std::string& prompt, JudgeBackend& judge,
                                     DecompositionCache& cache, const JudgePolicy& policy = {});

/// Step 2: renders the dimension instruction, submits it with both images,
/// and parses the constrained verdict token. Re-submits on parse failure up
/// to policy.parse_retries times, then throws JudgeError.
Verdict judge_pairwise(const JudgeComparisonRequest& request, JudgeBackend& judge,
                       const JudgePolicy& policy = {});

/// One tournament comparator per reward dimension of `kind`, bound to the
/// candidate images. GeneralAlignment comparators share one cached
/// decomposition of the prompt.
std::vector<PairwiseJudge> make_comparators(RewriterKind kind, std::span<const RewardKind> excluded,
                                            const std::string& user_prompt,
                                            std::span<const ImageHandle> images, JudgeBackend& judge,
                                            DecompositionCache& cache, const JudgePolicy& policy = {});

} // namespace promptforge
