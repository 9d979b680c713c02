#include "stirap/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stirap {

void ModelParams::validate() const {
  if (n < 2) throw std::invalid_argument("n >= 2 required (got " + std::to_string(n) + ")");
  if (mu < 0) throw std::invalid_argument("mu >= 0 required (got " + std::to_string(mu) + ")");
  if (!(g10_tau > 0.0) || !std::isfinite(g10_tau))
    throw std::invalid_argument("g10_tau must be positive and finite");
  if (!(g20_tau > 0.0) || !std::isfinite(g20_tau))
    throw std::invalid_argument("g20_tau must be positive and finite");
  if (!std::isfinite(T_over_tau)) throw std::invalid_argument("T_over_tau must be finite");
  if (!std::isfinite(delta_tau)) throw std::invalid_argument("delta_tau must be finite");
}

char to_char(AtomLevel level) {
  switch (level) {
    case AtomLevel::g: return 'g';
    case AtomLevel::e: return 'e';
    case AtomLevel::f: return 'f';
  }
  return '?';
}

Basis basis_labels(const ModelParams& params) {
  params.validate();
  using enum AtomLevel;
  const int n = params.n;
  const int mu = params.mu;
  return {{
      {g, g, n, mu},
      {g, e, n - 1, mu},
      {g, f, n - 1, mu + 1},
      {e, f, n - 2, mu + 1},
      {e, e, n - 2, mu},
      {f, f, n - 2, mu + 2},
      {f, e, n - 2, mu + 1},
      {f, g, n - 1, mu + 1},
      {e, g, n - 1, mu},
  }};
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

LabeledState StateVector::to_labeled() const {
  LabeledState out;
  out.subsystems.assign(std::begin(kAllSubsystems), std::end(kAllSubsystems));
  out.labels.reserve(kBasisSize);
  for (const auto& b : basis)
    out.labels.push_back({static_cast<int>(b.atom_a), static_cast<int>(b.atom_b), b.photons_a, b.photons_b});
  out.amplitudes.assign(amplitudes.begin(), amplitudes.end());
  return out;
}

LabeledDensityMatrix pure_density(const StateVector& psi) { return pure_density(psi.to_labeled()); }

StateVector to_lab_frame(const StateVector& rotating, double s, const ModelParams& params) {
  StateVector out = rotating;
  for (std::size_t i = 0; i < kBasisSize; ++i)
    out.amplitudes[i] *= std::polar(1.0, kExcitedCount[i] * params.delta_tau * s);
  return out;
}

PulseValues pulse_amplitudes(double s, const ModelParams& params) {
  const double ds = s - params.T_over_tau;
  return {params.g10_tau * std::exp(-ds * ds), params.g20_tau * std::exp(-s * s)};
}

ComplexMatrix coefficient_matrix(const Couplings& g, const ModelParams& params) {
  const double n = params.n;
  const double mu = params.mu;
  const double sn = std::sqrt(n);
  const double sn1 = std::sqrt(n - 1.0);
  const double smu1 = std::sqrt(mu + 1.0);
  const double smu2 = std::sqrt(mu + 2.0);
  const double det = params.delta_tau;

  ComplexMatrix m(kBasisSize);
  // 1-based indices as in the amplitude equations; stored symmetrically.
  const auto couple = [&m](std::size_t i, std::size_t j, double v) {
    m(i - 1, j - 1) = v;
    m(j - 1, i - 1) = v;
  };
  couple(1, 2, sn * g.g1b);
  couple(1, 9, sn * g.g1a);
  couple(2, 3, smu1 * g.g2b);
  couple(2, 5, sn1 * g.g1a);
  couple(3, 4, sn1 * g.g1a);
  couple(4, 5, smu1 * g.g2b);
  couple(4, 6, smu2 * g.g2a);
  couple(5, 7, smu1 * g.g2a);
  couple(5, 9, sn1 * g.g1b);
  couple(6, 7, smu2 * g.g2b);
  couple(7, 8, sn1 * g.g1b);
  couple(8, 9, smu1 * g.g2a);
  for (std::size_t i = 0; i < kBasisSize; ++i) m(i, i) = kExcitedCount[i] * det;
  return m;
}

ComplexMatrix coefficient_matrix(double g1_tau, double g2_tau, const ModelParams& params) {
  return coefficient_matrix(Couplings::symmetric(g1_tau, g2_tau), params);
}

std::array<double, 4> DarkState::coefficients() const {
  return {amplitudes[0], amplitudes[1], -amplitudes[2], -amplitudes[3]};
}

std::array<Complex, kBasisSize> DarkState::to_vector() const {
  std::array<Complex, kBasisSize> v{};
  for (std::size_t k = 0; k < kIndices.size(); ++k) v[kIndices[k]] = amplitudes[k];
  return v;
}

DarkState dark_state(const Couplings& g, const ModelParams& params) {
  const double n = params.n;
  const double mu = params.mu;
  const double alpha = g.g2a * g.g2b * std::sqrt((mu + 1.0) * (mu + 2.0));
  const double beta = g.g1a * g.g1b * std::sqrt(n * (n - 1.0));
  const double gamma = g.g1b * g.g2a * std::sqrt(n * (mu + 2.0));
  const double delta = g.g1a * g.g2b * std::sqrt(n * (mu + 2.0));
  const double p = std::sqrt(alpha * alpha + beta * beta + gamma * gamma + delta * delta);

  const double gmax = std::max(params.g10_tau, params.g20_tau);
  DarkState out;
  out.norm_p = p;
  if (p < 1e-9 * gmax * gmax) return out;
  out.defined = true;
  out.amplitudes = {alpha / p, beta / p, -gamma / p, -delta / p};
  return out;
}

DarkState dark_state(double g1_tau, double g2_tau, const ModelParams& params) {
  return dark_state(Couplings::symmetric(g1_tau, g2_tau), params);
}

}  // namespace stirap
