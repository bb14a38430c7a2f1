#pragma once

#include <cstdint>
#include <stdexcept>

namespace swarmalator {

enum class DelayModel { Constant, Uniform };

/// Message-passing characteristics of the distributed execution. Loss and
/// delay are applied independently per (message, recipient) link.
struct NetConfig {
    double publish_period = 0.05;
    double loss_probability = 0.0;
    DelayModel delay_model = DelayModel::Constant;
    double delay_constant = 0.0;
    double delay_min = 0.0;
    double delay_max = 0.0;
    double position_update_period = 0.05;
    std::uint64_t seed = 0;
    bool share_orientation = true;  // strip to reproduce the id/phase/position wire schema

    void validate() const {
        if (!(publish_period > 0.0)) throw std::invalid_argument("publish_period must be > 0");
        if (!(position_update_period > 0.0))
            throw std::invalid_argument("position_update_period must be > 0");
        if (!(loss_probability >= 0.0 && loss_probability <= 1.0))
            throw std::invalid_argument("loss_probability must be in [0, 1]");
        if (delay_model == DelayModel::Constant) {
            if (!(delay_constant >= 0.0)) throw std::invalid_argument("delay must be >= 0");
        } else {
            if (!(delay_min >= 0.0)) throw std::invalid_argument("delay min must be >= 0");
            if (!(delay_max >= delay_min))
                throw std::invalid_argument("delay max must be >= delay min");
        }
    }
};

}  // namespace swarmalator
