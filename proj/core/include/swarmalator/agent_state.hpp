#pragma once

#include <vector>

#include "swarmalator/vec2.hpp"

namespace swarmalator {

/// State of one entity: planar position, heading, internal phase and the
/// phase's natural frequency. Angles are kept wrapped into [0, 2*pi).
struct AgentState {
    int id = 0;
    Vec2 position;
    double orientation = 0.0;        // theta
    double phase = 0.0;              // phi
    double natural_frequency = 0.0;  // omega
};

/// Every agent's state at one instant, ordered by ascending id.
struct SwarmSnapshot {
    double time = 0.0;
    std::vector<AgentState> agents;
};

}  // namespace swarmalator
