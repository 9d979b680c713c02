#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "stirap/linalg.hpp"

namespace stirap {

/// One tensor factor of the two-atom, two-mode system. Also used as
/// generic slot names when a four-qubit register is analysed.
enum class SubsystemId { AtomA, AtomB, ModeA, ModeB };

inline constexpr SubsystemId kAllSubsystems[] = {SubsystemId::AtomA, SubsystemId::AtomB,
                                                 SubsystemId::ModeA, SubsystemId::ModeB};

std::string_view to_string(SubsystemId id);

/// Per-row labels, one integer per subsystem in the owning object's order.
using Label = std::vector<int>;

/// Pure state with labeled basis rows.
struct LabeledState {
  std::vector<SubsystemId> subsystems;
  std::vector<Label> labels;
  std::vector<Complex> amplitudes;
};

/// Density matrix whose rows and columns carry subsystem label tuples.
///
/// Construction checks that labels are pairwise distinct, sized consistently,
/// that the matrix is Hermitian and has unit trace within 1e-9. Positivity is
/// checked lazily by the spectral operations.
class LabeledDensityMatrix {
 public:
  LabeledDensityMatrix(std::vector<SubsystemId> subsystems, std::vector<Label> labels,
                       ComplexMatrix matrix);

  const std::vector<SubsystemId>& subsystems() const { return subsystems_; }
  const std::vector<Label>& labels() const { return labels_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }

  /// Position of `id` in subsystems(), or -1.
  int slot_of(SubsystemId id) const;
  /// Row index with exactly this label, or -1.
  int index_of(const Label& label) const;

 private:
  std::vector<SubsystemId> subsystems_;
  std::vector<Label> labels_;
  ComplexMatrix matrix_;
};

/// |psi><psi| with the state's labels. Rejects ||psi|| != 1 beyond 1e-9.
LabeledDensityMatrix pure_density(const LabeledState& psi);

/// Reduced density matrix over `keep`.
///
/// Kept subsystems appear in the same relative order as in rho. Result rows
/// are the distinct projections of rho's labels, in order of first
/// appearance. Rejects an empty keep set, ids not present in rho, and the
/// full set.
LabeledDensityMatrix partial_trace(const LabeledDensityMatrix& rho, std::span<const SubsystemId> keep);

/// Eigenvalues below this contribute nothing to the entropy.
inline constexpr double kEntropyCutoff = 1e-12;
/// Eigenvalues below this treated as zero by support_log2.
inline constexpr double kSupportCutoff = 1e-10;
/// Eigenvalues below this make a density non-physical.
inline constexpr double kNegativeEigenvalueLimit = -1e-6;

/// -Tr(rho log2 rho) in bits.
double von_neumann_entropy(const LabeledDensityMatrix& rho);
double von_neumann_entropy(std::span<const double> eigenvalues);

/// log2 on the support of rho, zero on its kernel.
ComplexMatrix support_log2(const LabeledDensityMatrix& rho);

/// Orthogonal projector onto the span of eigenvectors with eigenvalue above
/// kSupportCutoff.
ComplexMatrix support_projector(const LabeledDensityMatrix& rho);

}  // namespace stirap
