#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace promptforge {

/// Finite rewrite grammar: every candidate is a base prompt variant (the
/// full prompt or a condensed paraphrase that drops tokens) plus an ordered
/// subset of detail clauses. Small enough that the policy's softmax over
/// C(x) is exact.
struct RewriteGrammar {
    std::vector<std::string> clauses;

    static RewriteGrammar default_grammar();

    /// Condensed base variant: deterministically drops every third token.
    static std::string condense(const std::string& prompt);

    /// All candidates for a prompt, in index order: base variant major
    /// (full first), clause subset mask minor (ascending). Size 2 * 2^L.
    std::vector<std::string> candidates(const std::string& prompt) const;

    std::size_t candidate_count() const;

    /// Feature layout: [0] full-base indicator, [1..L] clause indicators,
    /// [L+1] appended-token count / 10.
    std::size_t feature_count() const { return clauses.size() + 2; }
    std::vector<double> features(std::size_t candidate_index) const;

    std::optional<std::size_t> index_of(const std::string& prompt,
                                        const std::string& completion) const;

    friend bool operator==(const RewriteGrammar&, const RewriteGrammar&) = default;
};

/// Candidate strings and features for one prompt, built once per call site.
struct GrammarSlice {
    std::vector<std::string> candidates;
    std::vector<std::vector<double>> features;  // [candidate][feature]
};

/// Desk-scale trainable rewriter: a linear softmax policy over the grammar's
/// candidate set with exact log-probabilities. Stands in for the LLM policy
/// so the optimization loop can be verified end to end with exact math.
class ToyPolicy {
public:
    ToyPolicy();
    explicit ToyPolicy(RewriteGrammar grammar);

    const RewriteGrammar& grammar() const noexcept { return grammar_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    std::vector<double>& weights() noexcept { return weights_; }

    GrammarSlice slice(const std::string& prompt) const;

    /// Exact log pi(completion | prompt) at temperature 1 (the training-time
    /// likelihood; the rollout temperature only affects sampling). Throws
    /// std::invalid_argument when the completion is outside the grammar.
    double logprob(const std::string& prompt, const std::string& completion) const;

    /// Log-probabilities of every candidate at the given temperature.
    std::vector<double> logprobs(const GrammarSlice& slice, double temperature) const;

    /// d logprob(completion | prompt) / d weights = phi(completion) - E_pi[phi].
    std::vector<double> logprob_grad(const GrammarSlice& slice, std::size_t candidate_index) const;

    /// n independent draws (with replacement) from the temperature-scaled
    /// softmax; deterministic given the seed.
    std::vector<std::string> sample(const std::string& prompt, int n, double temperature,
                                    std::uint64_t seed) const;

    /// Highest-probability candidate, ties broken by lowest index.
    std::string argmax_rewrite(const std::string& prompt) const;

    std::string serialize() const;
    static ToyPolicy deserialize(const std::string& text);

    friend bool operator==(const ToyPolicy&, const ToyPolicy&) = default;

private:
    RewriteGrammar grammar_;
    std::vector<double> weights_;
};

} // namespace promptforge
