#pragma once

#include <stdexcept>

#include "swarmalator/vec2.hpp"

namespace swarmalator {

/// Thrown when a pairwise kernel is evaluated at zero separation. Simulation
/// layers substitute a deterministic stand-in offset instead of letting this
/// escape a run (see coincidence_offset in dynamics.hpp).
struct CoincidentPositionsError : std::domain_error {
    CoincidentPositionsError() : std::domain_error("coincident agent positions") {}
};

/// I1: unit-vector attraction toward the neighbour, x_ij / |x_ij|.
Vec2 spatial_attraction(Vec2 x_ij);

/// F: 1 + J*cos(phi_ij). Bounded in [1-|J|, 1+|J|].
double phase_modulation(double phi_ij, double J);

/// I2 of the point-entity model: x_ij / |x_ij|^2.
Vec2 spatial_repulsion_original(Vec2 x_ij);

/// d_ij: gap between circular safety areas, max(|x_ij| - 2*r_safe, d_epsilon).
double safety_distance(Vec2 x_ij, double r_safe, double d_epsilon);

/// I2 of the robot model: x_ij / d_ij^2.
Vec2 spatial_repulsion_robot(Vec2 x_ij, double r_safe, double d_epsilon);

/// H: sin(phi_ij).
double phase_coupling(double phi_ij);

/// G_phi: 1 / |x_ij|.
double phase_spatial_kernel(Vec2 x_ij);

/// R: sin(theta_ij).
double orientation_coupling(double theta_ij);

/// G_theta: 1 / |x_ij|.
double orientation_spatial_kernel(Vec2 x_ij);

/// S: sin(angle(v_d) - theta_i); 0 when v_d vanishes (no preferred heading).
double heading_tracking(double theta_i, Vec2 v_d);

/// lambda: min{1, |v_d| / (P*C)}. Exactly 1 at P = 0.
double alignment_gate(Vec2 v_d, double P, double C);

}  // namespace swarmalator
