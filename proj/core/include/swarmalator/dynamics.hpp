#pragma once

#include <cstddef>
#include <span>

#include "swarmalator/agent_state.hpp"
#include "swarmalator/model_params.hpp"

namespace swarmalator {

enum class ModelMode { Original, Robot };

/// How pairwise terms handle two agents at exactly the same position.
enum class CoincidencePolicy {
    Error,               // propagate CoincidentPositionsError
    DeterministicOffset  // substitute a tiny id-derived separation
};

/// Instantaneous state derivatives of one agent.
struct StateRates {
    Vec2 x_dot;
    double theta_dot = 0.0;
    double phi_dot = 0.0;
};

/// Deterministic stand-in separation for coincident agents: direction from a
/// hash of the ordered (i, j) id pair, magnitude d_epsilon.
Vec2 coincidence_offset(int id_i, int id_j, double d_epsilon);

/// v_d: mean over known neighbours of I1*F - I2. `states` holds every agent
/// the computing agent knows about, itself included at index `self`; the 1/N
/// prefactor uses states.size(). An empty neighbour set yields (0, 0).
Vec2 desired_velocity(std::span<const AgentState> states, std::size_t self,
                      const ModelParams& params, ModelMode mode = ModelMode::Robot,
                      CoincidencePolicy policy = CoincidencePolicy::Error);

/// theta_dot before clamping: the lambda-blend of neighbour orientation
/// alignment and heading tracking toward v_d.
double orientation_rate(std::span<const AgentState> states, std::size_t self, Vec2 v_d,
                        const ModelParams& params,
                        CoincidencePolicy policy = CoincidencePolicy::Error);

/// Signed projection of v_d onto the heading unit vector, applied along the
/// heading. A negative projection is backward drive.
Vec2 projected_velocity(double theta_i, Vec2 v_d);

/// phi_dot: omega_i + (K/N) * sum of H * G_phi. Empty neighbour set: omega_i.
double phase_rate(std::span<const AgentState> states, std::size_t self,
                  const ModelParams& params,
                  CoincidencePolicy policy = CoincidencePolicy::Error);

/// Fully constrained rates of the robot model: theta_dot clamped to
/// +-theta_rate_max, x_dot the heading projection of v_d capped at v_max
/// preserving sign. Computed in one pass over the neighbour set; agrees with
/// the composition of the operations above to rounding error.
///
/// `use_neighbor_orientation = false` drops the neighbour alignment sum (the
/// wire schema without orientation), leaving lambda-weighted heading tracking.
StateRates robot_rates(std::span<const AgentState> states, std::size_t self,
                       const ModelParams& params,
                       CoincidencePolicy policy = CoincidencePolicy::Error,
                       bool use_neighbor_orientation = true);

/// Unconstrained rates of the original model: x_dot is the equation of motion
/// itself, theta_dot is zero.
StateRates original_rates(std::span<const AgentState> states, std::size_t self,
                          const ModelParams& params,
                          CoincidencePolicy policy = CoincidencePolicy::Error);

}  // namespace swarmalator
