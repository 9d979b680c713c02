#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <vector>

#include "stirap/dynamics.hpp"
#include "stirap/qstate.hpp"

namespace stirap {

/// Von Neumann entropy (bits) of every non-empty subset of a density
/// matrix's subsystems, computed once at construction.
class SubsystemEntropies {
 public:
  explicit SubsystemEntropies(const LabeledDensityMatrix& rho);

  /// Entropy of the reduction onto `subset`. Rejects an empty subset and
  /// ids that are not part of the state.
  double of(std::span<const SubsystemId> subset) const;
  double of(std::initializer_list<SubsystemId> subset) const {
    return of(std::span<const SubsystemId>(subset.begin(), subset.size()));
  }

  const std::vector<SubsystemId>& subsystems() const { return subsystems_; }

 private:
  unsigned mask_of(std::span<const SubsystemId> subset) const;

  std::vector<SubsystemId> subsystems_;
  std::vector<double> by_mask_;
};

/// Entropy of a subset of the four-party state held by the frame.
double joint_entropy(const TrajectoryFrame& frame, std::span<const SubsystemId> subsystems);

/// Strong-subadditivity diagnostics with A = AtomA, B = AtomB, n = ModeA.
struct EntropyReport {
  double s = 0.0;
  double S_A = 0.0;
  double S_AB = 0.0;
  double S_An = 0.0;
  double S_ABn = 0.0;
  double E = 0.0;  // S_AB + S_An - S_ABn - S_A
  double Ic_AB = 0.0;
  bool araki_lieb_ok = true;
  bool ssi_ok = true;  // E >= -1e-9
};

inline constexpr double kInequalityTolerance = 1e-9;

EntropyReport ssi_parameter(const TrajectoryFrame& frame);
EntropyReport ssi_parameter(const SubsystemEntropies& entropies, double s = 0.0);

/// S(first) + S(second) - S(first, second) for two distinct subsystems.
double index_of_correlation(const TrajectoryFrame& frame, SubsystemId first, SubsystemId second);

struct ArakiLiebBounds {
  double lower = 0.0;  // |S(first) - S(second)|
  double joint = 0.0;
  double upper = 0.0;  // S(first) + S(second)
  bool ok = true;
};

ArakiLiebBounds araki_lieb_check(const SubsystemEntropies& entropies, SubsystemId first, SubsystemId second);
ArakiLiebBounds araki_lieb_check(const TrajectoryFrame& frame, SubsystemId first, SubsystemId second);

/// S(target | given) = S(target u given) - S(given). Subsets must be
/// disjoint and non-empty.
double conditional_entropy(const SubsystemEntropies& entropies, std::span<const SubsystemId> target,
                           std::span<const SubsystemId> given);
double conditional_entropy(const TrajectoryFrame& frame, std::span<const SubsystemId> target,
                           std::span<const SubsystemId> given);

/// S(first : second) = S(first) + S(second) - S(first u second).
double mutual_information(const SubsystemEntropies& entropies, std::span<const SubsystemId> first,
                          std::span<const SubsystemId> second);
double mutual_information(const TrajectoryFrame& frame, std::span<const SubsystemId> first,
                          std::span<const SubsystemId> second);

/// S(AB) + S(BC) - S(ABC) - S(B); non-negative by strong subadditivity.
double ssi_gap(const SubsystemEntropies& entropies, std::span<const SubsystemId> a,
               std::span<const SubsystemId> b, std::span<const SubsystemId> c);

/// Three disjoint groups that together cover a density matrix's subsystems.
struct Partition {
  std::vector<SubsystemId> a;
  std::vector<SubsystemId> b;
  std::vector<SubsystemId> c;
};

struct EqualityCheck {
  /// max-entry norm of P[(log rho_ABC - log rho_AB) - (log rho_BC - log rho_B)]P,
  /// P the projector onto the support of rho_ABC, reduced logs lifted with
  /// identity on the absent factors.
  double residual = 0.0;
  /// supp(rho_ABC) lies inside the lifted supports of rho_AB, rho_BC, rho_B.
  bool supports_compatible = true;
};

/// Throws std::invalid_argument when the partition does not match rho.
EqualityCheck equality_condition_check(const LabeledDensityMatrix& rho, const Partition& partition);
double equality_condition_residual(const LabeledDensityMatrix& rho, const Partition& partition);

/// (|0000> + |1111>)/sqrt(2), qubits on slots AtomA, AtomB, ModeA, ModeB.
LabeledState ghz_state();

/// The GHZ state traced over its last qubit: (|000><000| + |111><111|)/2.
LabeledDensityMatrix ghz_reduced_density();

struct GhzReport {
  double S_ABC = 0.0;
  double S_A = 0.0;
  double S_AB = 0.0;
  double S_BC = 0.0;
  double S_AC = 0.0;
  double E = 0.0;  // S_AB + S_AC - S_ABC - S_A
  EqualityCheck equality;
};

GhzReport ghz_report();

}  // namespace stirap
