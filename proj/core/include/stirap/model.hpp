#pragma once

#include <array>
#include <cstddef>

#include "stirap/linalg.hpp"
#include "stirap/qstate.hpp"

namespace stirap {

inline constexpr std::size_t kBasisSize = 9;

/// Physical configuration. Times are in units of the pulse width tau and
/// rates are multiplied by tau, so every field is dimensionless.
struct ModelParams {
  int n = 2;    // initial photons in mode a
  int mu = 0;   // initial photons in mode b
  double g10_tau = 15.0;
  double g20_tau = 15.0;
  double T_over_tau = 4.0 / 3.0;  // pulse separation
  double delta_tau = 0.0;         // one-photon detuning

  /// Throws std::invalid_argument on n < 2, mu < 0, non-positive or
  /// non-finite amplitudes, or non-finite T / detuning.
  void validate() const;
};

enum class AtomLevel { g = 0, e = 1, f = 2 };

char to_char(AtomLevel level);

struct BasisLabel {
  AtomLevel atom_a;
  AtomLevel atom_b;
  int photons_a;
  int photons_b;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

using Basis = std::array<BasisLabel, kBasisSize>;

/// The nine states reachable from |g,g,n,mu>, ordered c1..c9.
Basis basis_labels(const ModelParams& params);

/// Number of atoms in |e> for each basis index; sets the rotating-frame phase.
inline constexpr std::array<int, kBasisSize> kExcitedCount = {0, 1, 0, 1, 2, 0, 1, 0, 1};

/// Amplitudes over basis_labels(), in the rotating frame unless noted.
struct StateVector {
  std::array<Complex, kBasisSize> amplitudes{};
  Basis basis{};

  double norm() const;
  double population(std::size_t index) const { return std::norm(amplitudes[index]); }
  LabeledState to_labeled() const;
};

LabeledDensityMatrix pure_density(const StateVector& psi);

/// Rotating-frame amplitudes d -> lab-frame amplitudes c at time s:
/// c_i = d_i exp(i k_i delta_tau s), k_i the number of excited atoms.
StateVector to_lab_frame(const StateVector& rotating, double s, const ModelParams& params);

/// Per-atom couplings (times tau). The pulse schedule sets A and B equal.
struct Couplings {
  double g1a = 0.0;
  double g1b = 0.0;
  double g2a = 0.0;
  double g2b = 0.0;

  static Couplings symmetric(double g1, double g2) { return {g1, g1, g2, g2}; }
};

struct PulseValues {
  double g1_tau;
  double g2_tau;
};

/// Gaussian pulse pair in counterintuitive order: the mode-b coupling peaks
/// at s = 0, the mode-a coupling at s = T/tau.
PulseValues pulse_amplitudes(double s, const ModelParams& params);

/// Real symmetric generator M*tau of d' = -i M d.
ComplexMatrix coefficient_matrix(const Couplings& g, const ModelParams& params);
ComplexMatrix coefficient_matrix(double g1_tau, double g2_tau, const ModelParams& params);

/// Zero-eigenvalue eigenvector of the coefficient matrix.
struct DarkState {
  /// Basis indices (0-based) of the four amplitudes.
  static constexpr std::array<std::size_t, 4> kIndices = {0, 5, 2, 7};

  /// (alpha, beta, -gamma, -delta) / P. Zero when undefined.
  std::array<double, 4> amplitudes{};
  double norm_p = 0.0;
  bool defined = false;

  /// (alpha, beta, gamma, delta) / P, all non-negative.
  std::array<double, 4> coefficients() const;
  std::array<Complex, kBasisSize> to_vector() const;
};

/// Undefined when P < 1e-9 * max(g10, g20)^2, where both pulses vanish.
DarkState dark_state(const Couplings& g, const ModelParams& params);
DarkState dark_state(double g1_tau, double g2_tau, const ModelParams& params);

}  // namespace stirap
