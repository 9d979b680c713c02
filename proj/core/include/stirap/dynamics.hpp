#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "stirap/model.hpp"

namespace stirap {

/// Uniform integration grid in units of tau.
struct TimeGrid {
  double s_start = -3.0;
  double s_end = 3.0 + 4.0 / 3.0;
  int steps = 12000;
  int record_every = 1;

  /// Throws std::invalid_argument unless s_start < s_end, steps >= 100 and
  /// record_every >= 1.
  void validate() const;
  double step_size() const { return (s_end - s_start) / steps; }

  /// [-3, T/tau + 3]; both pulses are below 1.3e-4 of peak outside it.
  static TimeGrid default_for(const ModelParams& params, int steps = 12000, int record_every = 1);
};

struct TrajectoryFrame {
  double s = 0.0;
  StateVector state;
  std::optional<double> dark_overlap;
  double g1_tau = 0.0;
  double g2_tau = 0.0;
};

/// Thrown when the integration produces NaN/Inf or loses unitarity.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |g,g,n,mu> with amplitude 1.
StateVector initial_state(const ModelParams& params);

/// One classical RK4 step of d' = -i M(s) d from s to s + h (h > 0).
StateVector step(const StateVector& state, double s, double h, const ModelParams& params);

/// Integrates over the grid from initial_state(). Records step 0, every
/// record_every-th step and the final step.
///
/// Throws IntegrationError if the norm drifts by more than 1e-6.
std::vector<TrajectoryFrame> evolve(const ModelParams& params, const TimeGrid& grid);

/// Integrates `state` from grid.s_end back to grid.s_start over the same
/// nodes, i.e. with the time direction reversed.
StateVector evolve_backward(const StateVector& state, const ModelParams& params, const TimeGrid& grid);

/// |<psi0(s)|d(s)>|^2, absent where the dark state is undefined.
std::optional<double> adiabatic_overlap(const TrajectoryFrame& frame, const ModelParams& params);

}  // namespace stirap
