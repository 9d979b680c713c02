#include "stirap/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stirap {

std::string_view to_string(SubsystemId id) {
  switch (id) {
    case SubsystemId::AtomA: return "AtomA";
    case SubsystemId::AtomB: return "AtomB";
    case SubsystemId::ModeA: return "ModeA";
    case SubsystemId::ModeB: return "ModeB";
  }
  return "?";
}

LabeledDensityMatrix::LabeledDensityMatrix(std::vector<SubsystemId> subsystems,
                                           std::vector<Label> labels, ComplexMatrix matrix)
    : subsystems_(std::move(subsystems)), labels_(std::move(labels)), matrix_(std::move(matrix)) {
  if (subsystems_.empty()) throw std::invalid_argument("density matrix needs at least one subsystem");
  for (std::size_t i = 0; i < subsystems_.size(); ++i)
    for (std::size_t j = i + 1; j < subsystems_.size(); ++j)
      if (subsystems_[i] == subsystems_[j])
        throw std::invalid_argument("duplicate subsystem " + std::string(to_string(subsystems_[i])));
  if (labels_.size() != matrix_.dim())
    throw std::invalid_argument("label count does not match matrix dimension");
  std::map<Label, std::size_t> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].size() != subsystems_.size())
      throw std::invalid_argument("label tuple length does not match subsystem count");
    if (!seen.emplace(labels_[i], i).second) {
      std::ostringstream msg;
      msg << "rows " << seen[labels_[i]] << " and " << i << " carry the same label";
      throw std::invalid_argument(msg.str());
    }
  }
  if (!is_hermitian(matrix_)) {
    const auto d = hermiticity_defect(matrix_);
    std::ostringstream msg;
    msg << "density matrix is not Hermitian at (" << d.row << "," << d.col << "), deviation "
        << d.deviation;
    throw std::invalid_argument(msg.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << " (expected 1)";
    throw std::invalid_argument(msg.str());
  }
}

int LabeledDensityMatrix::slot_of(SubsystemId id) const {
  const auto it = std::find(subsystems_.begin(), subsystems_.end(), id);
  return it == subsystems_.end() ? -1 : static_cast<int>(it - subsystems_.begin());
}

int LabeledDensityMatrix::index_of(const Label& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

LabeledDensityMatrix pure_density(const LabeledState& psi) {
  if (psi.labels.size() != psi.amplitudes.size())
    throw std::invalid_argument("state has a different number of labels and amplitudes");
  double norm2 = 0.0;
  for (const auto& a : psi.amplitudes) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "state is not normalized: ||psi|| = " << std::sqrt(norm2);
    throw std::invalid_argument(msg.str());
  }
  const std::size_t n = psi.amplitudes.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  return {psi.subsystems, psi.labels, std::move(m)};
}

LabeledDensityMatrix partial_trace(const LabeledDensityMatrix& rho, std::span<const SubsystemId> keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs a non-empty keep set");
  const auto& subs = rho.subsystems();
  std::vector<bool> kept(subs.size(), false);
  for (const auto id : keep) {
    const int slot = rho.slot_of(id);
    if (slot < 0)
      throw std::invalid_argument("subsystem " + std::string(to_string(id)) + " is not part of the state");
    if (kept[slot]) throw std::invalid_argument("subsystem " + std::string(to_string(id)) + " listed twice");
    kept[slot] = true;
  }
  if (std::all_of(kept.begin(), kept.end(), [](bool k) { return k; }))
    throw std::invalid_argument("keep set covers every subsystem; no trace to take");

  std::vector<SubsystemId> out_subs;
  for (std::size_t s = 0; s < subs.size(); ++s)
    if (kept[s]) out_subs.push_back(subs[s]);

  const std::size_t n = rho.dim();
  std::vector<Label> kept_part(n), traced_part(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < subs.size(); ++s)
      (kept[s] ? kept_part[i] : traced_part[i]).push_back(rho.labels()[i][s]);

  std::vector<Label> out_labels;
  std::map<Label, std::size_t> out_index;
  std::vector<std::size_t> row_to_out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = out_index.emplace(kept_part[i], out_labels.size());
    if (inserted) out_labels.push_back(kept_part[i]);
    row_to_out[i] = it->second;
  }

  ComplexMatrix out(out_labels.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (traced_part[i] == traced_part[j]) out(row_to_out[i], row_to_out[j]) += rho.matrix()(i, j);

  return {std::move(out_subs), std::move(out_labels), std::move(out)};
}

double von_neumann_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (const double lambda : eigenvalues) {
    if (lambda < kNegativeEigenvalueLimit) {
      std::ostringstream msg;
      msg << "non-physical state: eigenvalue " << lambda;
      throw std::domain_error(msg.str());
    }
    if (lambda > kEntropyCutoff) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const LabeledDensityMatrix& rho) {
  return von_neumann_entropy(hermitian_eigensystem(rho.matrix()).values);
}

namespace {

template <typename F>
ComplexMatrix spectral_map(const LabeledDensityMatrix& rho, F&& f) {
  const auto es = hermitian_eigensystem(rho.matrix());
  const std::size_t n = rho.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = es.values[k];
    if (lambda < kNegativeEigenvalueLimit) {
      std::ostringstream msg;
      msg << "non-physical state: eigenvalue " << lambda;
      throw std::domain_error(msg.str());
    }
    if (lambda <= kSupportCutoff) continue;
    const double w = f(lambda);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += w * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return out;
}

}  // namespace

ComplexMatrix support_log2(const LabeledDensityMatrix& rho) {
  return spectral_map(rho, [](double lambda) { return std::log2(lambda); });
}

ComplexMatrix support_projector(const LabeledDensityMatrix& rho) {
  return spectral_map(rho, [](double) { return 1.0; });
}

}  // namespace stirap
