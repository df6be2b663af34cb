#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "promptforge/image.hpp"

namespace promptforge {

/// Outcome of one pairwise judge call.
enum class Verdict { FirstPreferred, SecondPreferred, Tie };

/// The n rewrites sampled for one prompt, each bound to a generated image.
struct CandidateSet {
    std::string prompt_id;
    std::string prompt;                 // original user prompt x
    std::vector<std::string> rewrites;  // y_1..y_n (duplicates kept)
    std::vector<ImageHandle> images;    // one per rewrite
};

/// A pairwise comparator. Called with the two candidate positions being
/// compared; implementations capture the candidate images, the dimension
/// template and the judge backend. Throws JudgeError on failure.
using PairwiseJudge = std::function<Verdict(std::size_t first, std::size_t second)>;

struct TournamentOptions {
    int parallelism = 1;    // concurrent judge calls
    int judge_retries = 2;  // extra attempts before an errored comparison scores as a tie
};

/// Vote tallies from one full ordered-pair tournament.
struct ScoreBoard {
    std::size_t n = 0;
    std::size_t judge_count = 0;                     // K
    std::vector<std::vector<int>> per_model_scores;  // [candidate][judge]
    std::vector<int> totals;                         // totals[i] == sum_k per_model_scores[i][k]
    int judge_errors = 0;                            // comparisons scored as ties after failures
};

struct PairSelection {
    std::size_t winner_index = 0;
    std::size_t loser_index = 0;
    bool degenerate = false;  // all totals equal; no preference signal
};

/// All n(n-1) ordered index pairs (i, j), i != j, outer index ascending.
/// Throws std::invalid_argument for n < 2.
std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t n);

/// Evaluates every ordered pair under every judge and folds the +1/-1/tie
/// votes into a ScoreBoard. A judge call that still throws after
/// `judge_retries` extra attempts scores as a tie and increments
/// judge_errors. The fold is a pure reduction over the verdict slots, so
/// the board is identical regardless of completion order.
ScoreBoard run_tournament(std::size_t candidate_count, std::span<const PairwiseJudge> judges,
                          const TournamentOptions& options = {});

/// Convenience overload for a bound candidate set.
ScoreBoard run_tournament(const CandidateSet& candidates, std::span<const PairwiseJudge> judges,
                          const TournamentOptions& options = {});

/// Argmax/argmin of totals with lowest-index tie-break. Degenerate boards
/// (all totals equal) are flagged, not an error.
PairSelection select_pair(const ScoreBoard& board);

} // namespace promptforge
