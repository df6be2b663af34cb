#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "promptforge/image.hpp"
#include "promptforge/policy.hpp"
#include "promptforge/rewards.hpp"

namespace promptforge {

struct GenerationParams {
    int width = 1024;
    int height = 1024;
};

/// Connection settings for one service. `auth_env` names the environment
/// variable holding the bearer token; the resolved value is read at call
/// time and never serialized.
struct BackendConfig {
    std::string endpoint_url;  // e.g. "http://host:8000/v1"
    std::string auth_env;
    std::string model_name;
    std::chrono::milliseconds timeout{30000};
    int retries = 2;
    int parallelism = 4;  // max in-flight requests
    GenerationParams generation{};
};

struct BackendHealth {
    bool healthy = false;
    std::string cause;  // empty when healthy
};

/// Candidate-rewrite completion service (the trainable policy's serving side).
class RewriterBackend {
public:
    virtual ~RewriterBackend() = default;
    virtual std::vector<std::string> complete(const std::string& prompt, int n, double temperature,
                                              std::uint64_t seed) = 0;
    virtual BackendHealth health() = 0;
};

/// Frozen text-to-image service. Generation is the only operation.
class TextToImageBackend {
public:
    virtual ~TextToImageBackend() = default;
    virtual ImageHandle generate(const std::string& rewrite, std::uint64_t seed,
                                 const std::string& prompt_id, int candidate_index) = 0;
    virtual BackendHealth health() = 0;
};

/// Wire payload for one pairwise judging call. The instruction is the
/// rendered template; the simulator scores from the semantic fields instead.
struct JudgeRequest {
    RewardKind dimension = RewardKind::Quality;
    std::string user_prompt;
    std::string instruction;
    ImageHandle first;
    ImageHandle second;
};

/// Multimodal judge service: pairwise comparisons plus the text-only
/// decomposition step. Both return the raw reply text; parsing is the
/// rewards module's job.
class JudgeBackend {
public:
    virtual ~JudgeBackend() = default;
    virtual std::string compare(const JudgeRequest& request) = 0;
    virtual std::string chat(const std::string& instruction) = 0;
    virtual BackendHealth health() = 0;
};

/// Deterministic stand-in for T2I + MLLM judging. Scores are a pure
/// function of (prompt text, rewrite text, dimension):
///   Quality            sum of keyword_weights over distinct rewrite tokens
///   GeneralAlignment   content-token coverage of the original prompt,
///                      minus a dilution penalty that grows with appended length
///   PhysicalAlignment  coverage of the prompt's count/spatial tokens
///   Aesthetics         appended length, saturating at length_saturation
/// A pair within tie_band is a tie; with order_bias_first set, those close
/// calls answer FIRST instead (supports the bias-neutralization tests).
struct SyntheticWorld {
    std::map<std::string, double> keyword_weights;
    int length_saturation = 24;
    double tie_band = 1e-9;
    double alignment_dilution = 0.35;
    bool order_bias_first = false;

    static SyntheticWorld default_world();

    double score(RewardKind dimension, const std::string& user_prompt,
                 const std::string& rewrite) const;
};

class SimulatedRewriter : public RewriterBackend {
public:
    using PolicyProvider = std::function<std::shared_ptr<const ToyPolicy>()>;
    explicit SimulatedRewriter(PolicyProvider provider);
    std::vector<std::string> complete(const std::string& prompt, int n, double temperature,
                                      std::uint64_t seed) override;
    BackendHealth health() override;

private:
    PolicyProvider provider_;
};

class SimulatedTextToImage : public TextToImageBackend {
public:
    SimulatedTextToImage(std::shared_ptr<ImageStore> store, GenerationParams params);
    ImageHandle generate(const std::string& rewrite, std::uint64_t seed,
                         const std::string& prompt_id, int candidate_index) override;
    BackendHealth health() override;

    /// Derives the deterministic 64-dim feature vector for (rewrite, seed).
    static std::vector<double> image_features(const std::string& rewrite, std::uint64_t seed);

private:
    std::shared_ptr<ImageStore> store_;
    GenerationParams params_;
};

class SimulatedJudge : public JudgeBackend {
public:
    SimulatedJudge(SyntheticWorld world, std::shared_ptr<ImageStore> store, int parallelism = 64);
    std::string compare(const JudgeRequest& request) override;
    std::string chat(const std::string& instruction) override;
    BackendHealth health() override;

    const SyntheticWorld& world() const noexcept { return world_; }
    /// High-water mark of concurrent compare() calls (parallelism-ceiling tests).
    int max_in_flight() const noexcept { return max_in_flight_.load(); }

private:
    SyntheticWorld world_;
    std::shared_ptr<ImageStore> store_;
    int parallelism_;
    std::atomic<int> in_flight_{0};
    std::atomic<int> max_in_flight_{0};
};

/// Scripted question generation used by the simulated judge's chat():
/// count questions ("Are there four apples?"), presence questions
/// ("Is there a table?") and an on-vs-below question for "X on Y" prompts.
std::vector<std::string> scripted_decomposition(const std::string& prompt);

struct BackendSet {
    std::unique_ptr<RewriterBackend> rewriter;
    std::unique_ptr<TextToImageBackend> t2i;
    std::unique_ptr<JudgeBackend> judge;
    std::shared_ptr<ImageStore> images;
};

BackendSet make_simulated_backends(const SyntheticWorld& world, std::shared_ptr<ImageStore> store,
                                   SimulatedRewriter::PolicyProvider policy_provider,
                                   GenerationParams params = {}, int judge_parallelism = 64);

/// HTTP clients: OpenAI-compatible chat completions for rewriter and judge
/// (images as base64 content parts), POST /generate for T2I.
BackendSet make_http_backends(const BackendConfig& rewriter, const BackendConfig& t2i,
                              const BackendConfig& judge, std::shared_ptr<ImageStore> store);

struct BackendSetHealth {
    BackendHealth rewriter;
    BackendHealth t2i;
    BackendHealth judge;
    bool all_healthy() const { return rewriter.healthy && t2i.healthy && judge.healthy; }
};

/// Lightweight probe of every backend. Failures are reported as statuses,
/// never thrown.
BackendSetHealth health_check(BackendSet& backends);

} // namespace promptforge
