#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "swarmalator/dynamics.hpp"
#include "swarmalator/model_params.hpp"

namespace swarmalator {

/// Natural-frequency assignment. Every experiment in the source model uses
/// omega = 0 for all agents; a scalar or a per-agent list is selectable.
struct OmegaAssignment {
    double scalar = 0.0;
    std::vector<double> per_agent;  // overrides scalar when non-empty

    double value_for(std::size_t agent_index) const {
        return per_agent.empty() ? scalar : per_agent.at(agent_index);
    }
};

struct SimConfig {
    ModelMode mode = ModelMode::Robot;
    int n = 100;
    ModelParams params;
    int steps = 4000;
    std::uint64_t seed = 0;
    double init_range = 1.0;  // half-width of the uniform init square
    OmegaAssignment omega;
    int sample_every = 1;  // trace sampling interval, in steps

    void validate() const {
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (steps < 0) throw std::invalid_argument("steps must be >= 0");
        if (!(init_range > 0.0)) throw std::invalid_argument("init_range must be > 0");
        if (sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");
        if (!omega.per_agent.empty() &&
            omega.per_agent.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("omega list length must equal n");
        params.validate();
    }
};

}  // namespace swarmalator
