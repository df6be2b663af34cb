#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "promptforge/optim.hpp"
#include "promptforge/policy.hpp"

namespace promptforge {

/// Training hyperparameters. The defaults are the paper-scale profile;
/// the desk profile overrides a subset (see config.hpp).
struct DpoConfig {
    double beta = 0.1;
    double learning_rate = 5.0e-6;
    int epochs_per_round = 5;
    int batch_size = 256;
    double warmup_ratio = 0.1;  // fraction of the round's scheduled steps
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    double weight_decay = 0.01;
    double rollout_temperature = 1.5;
    int lora_rank = 64;  // recorded in exports for external LoRA trainers

    friend bool operator==(const DpoConfig&, const DpoConfig&) = default;
};

struct TripletMeta {
    std::string template_hash;
    int judge_errors = 0;

    friend bool operator==(const TripletMeta&, const TripletMeta&) = default;
};

/// One DPO training unit: (x, y_w, y_l) plus provenance.
struct PreferenceTriplet {
    std::string prompt;
    std::string chosen;
    std::string rejected;
    int round = 0;
    int score_winner = 0;
    int score_loser = 0;
    TripletMeta meta;

    friend bool operator==(const PreferenceTriplet&, const PreferenceTriplet&) = default;
};

/// Mean over the batch of -log sigma(beta * (chosen - rejected)) where each
/// entry is (chosen_logratio, rejected_logratio) and a logratio is
/// log pi_theta(y|x) - log pi_ref(y|x). Computed through the softplus form
/// so large |beta * delta| cannot overflow. Throws std::invalid_argument on
/// an empty batch or beta < 0.
double dpo_loss(std::span<const std::pair<double, double>> logratios, double beta);

/// (dL/d chosen_logratio, dL/d rejected_logratio) for a single pair:
/// (-beta * sigma(-beta * delta), +beta * sigma(-beta * delta)).
/// The two components sum to zero exactly.
std::pair<double, double> dpo_grad_logratios(double chosen_logratio, double rejected_logratio,
                                             double beta);

/// Full-batch loss and its exact gradient with respect to the policy
/// weights, holding the reference fixed.
struct BatchEvaluation {
    double loss = 0.0;
    std::vector<double> grad;
};
BatchEvaluation evaluate_batch(const ToyPolicy& policy, const ToyPolicy& reference,
                               std::span<const PreferenceTriplet> triplets, double beta);

struct EpochStats {
    double mean_loss = 0.0;
    int steps = 0;
};

/// One pass over the round's triplet set: shuffles by `epoch_seed`, iterates
/// mini-batches of config.batch_size, and applies AdamW updates scaled by
/// `schedule` at the running `step_counter`. The reference snapshot is never
/// modified. Throws TrainingError (with a state dump) on non-finite loss or
/// gradient.
EpochStats train_epoch(ToyPolicy& policy, const ToyPolicy& reference,
                       std::span<const PreferenceTriplet> triplets, const DpoConfig& config,
                       AdamW& optimizer, const WarmupCosineSchedule& schedule, int& step_counter,
                       std::uint64_t epoch_seed);

/// The round's schedule horizon: epochs * ceil(#triplets / batch_size) steps
/// with warmup_ratio of them linear warmup.
WarmupCosineSchedule round_schedule(std::size_t triplet_count, const DpoConfig& config);

/// Provenance recorded in the export sidecar.
struct ExportProvenance {
    std::string corpus_id;
    std::string checkpoint_id;
    std::vector<int> rounds;
};

/// Writes one JSON object per line:
///   {"prompt", "chosen", "rejected", "round", "score_winner", "score_loser",
///    "meta": {"template_hash", "judge_errors"}}
/// plus a `<destination>.meta.json` sidecar carrying the full DpoConfig and
/// provenance. Returns the number of lines written; throws ExportError with
/// the partial count on I/O failure.
std::size_t export_triplets(std::span<const PreferenceTriplet> triplets,
                            const std::filesystem::path& destination, const DpoConfig& config,
                            const ExportProvenance& provenance);

/// Reads a triplet JSONL file written by export_triplets.
std::vector<PreferenceTriplet> load_triplets(const std::filesystem::path& source);

} // namespace promptforge
