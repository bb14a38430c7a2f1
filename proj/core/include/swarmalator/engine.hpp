#pragma once

#include "swarmalator/sim_config.hpp"
#include "swarmalator/trace.hpp"

namespace swarmalator {

/// Draws the initial swarm: positions i.i.d. uniform in the init square,
/// phases and orientations i.i.d. uniform in [0, 2*pi). Deterministic in the
/// seed; per agent the draw order is x, y, theta, phi.
SwarmSnapshot init_uniform(const SimConfig& config);

/// One synchronous explicit-Euler step of the original point-entity model:
/// unconstrained motion, no orientation, point repulsion.
SwarmSnapshot step_original(const SwarmSnapshot& snapshot, const ModelParams& params);

/// One synchronous explicit-Euler step of the robot model: clamped turn rate,
/// heading-projected and speed-capped motion, safety-area repulsion.
SwarmSnapshot step_robot(const SwarmSnapshot& snapshot, const ModelParams& params);

/// Runs `steps` iterations of the configured mode. Emits every agent's state
/// to `sink` at t = 0, every `sample_every` steps, and at the final step.
SwarmSnapshot run(const SimConfig& config, TraceSink& sink);

}  // namespace swarmalator
