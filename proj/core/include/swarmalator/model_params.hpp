#pragma once

#include <numbers>
#include <stdexcept>

namespace swarmalator {

/// Coupling and constraint constants of the swarmalator model.
///
///   J  phase-dependent spatial attraction strength, in [-1, 1]
///   K  phase coupling strength
///   P  orientation-alignment strength of the robot extension, >= 0
///   C  threshold-velocity constant of the alignment gate, > 0
///
/// The remaining fields are the robot movement constraints plus the
/// integration step. The model is fixed to two spatial dimensions.
struct ModelParams {
    double J = 0.1;
    double K = 1.0;
    double P = 0.0;
    double C = 0.15;
    double r_safe = 0.05;          // radius of the circular safety area
    double v_max = 0.15;           // linear speed cap
    double theta_rate_max = std::numbers::pi;  // angular rate cap
    double dt = 0.05;
    double d_epsilon = 1e-3;       // singularity floor for the safety distance
    bool allow_backward = true;    // permit reverse drive along the heading

    static constexpr int dimension = 2;

    /// Throws std::invalid_argument naming the violated bound.
    void validate() const {
        if (!(J >= -1.0 && J <= 1.0)) throw std::invalid_argument("J must be in [-1, 1]");
        if (!(P >= 0.0)) throw std::invalid_argument("P must be >= 0");
        if (!(C > 0.0)) throw std::invalid_argument("C must be > 0");
        if (!(r_safe >= 0.0)) throw std::invalid_argument("r_safe must be >= 0");
        if (!(v_max > 0.0)) throw std::invalid_argument("v_max must be > 0");
        if (!(theta_rate_max > 0.0)) throw std::invalid_argument("theta_rate_max must be > 0");
        if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
        if (!(d_epsilon > 0.0)) throw std::invalid_argument("d_epsilon must be > 0");
    }
};

}  // namespace swarmalator
