#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace promptforge {

/// AdamW with decoupled weight decay.
class AdamW {
public:
    struct Params {
        double learning_rate = 5.0e-6;
        double beta1 = 0.9;
        double beta2 = 0.999;
        double epsilon = 1e-8;
        double weight_decay = 0.01;
    };

    AdamW() = default;
    AdamW(std::size_t parameter_count, Params params);

    void reset(std::size_t parameter_count);
    const Params& params() const noexcept { return params_; }
    std::size_t step_index() const noexcept { return step_; }

    /// One update. `lr_scale` multiplies the base learning rate (the
    /// warmup/cosine schedule feeds through here).
    void step(std::vector<double>& parameters, std::span<const double> gradients,
              double lr_scale = 1.0);

private:
    Params params_;
    std::vector<double> moment1_;
    std::vector<double> moment2_;
    std::size_t step_ = 0;
};

/// Linear warmup over the first `warmup_steps`, then cosine decay to zero
/// at `total_steps`.
struct WarmupCosineSchedule {
    int total_steps = 1;
    int warmup_steps = 0;

    /// Learning-rate multiplier for 0-based optimizer step `step`.
    double scale_at(int step) const;
};

} // namespace promptforge
