#include "stirap/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stirap {

void TimeGrid::validate() const {
  if (!std::isfinite(s_start) || !std::isfinite(s_end))
    throw std::invalid_argument("time grid bounds must be finite");
  if (!(s_start < s_end)) throw std::invalid_argument("time grid needs s_start < s_end");
  if (steps < 100) throw std::invalid_argument("time grid needs at least 100 steps");
  if (record_every < 1) throw std::invalid_argument("record_every must be >= 1");
}

TimeGrid TimeGrid::default_for(const ModelParams& params, int steps, int record_every) {
  return {-3.0, params.T_over_tau + 3.0, steps, record_every};
}

StateVector initial_state(const ModelParams& params) {
  StateVector psi;
  psi.basis = basis_labels(params);
  psi.amplitudes[0] = 1.0;
  return psi;
}

namespace {

using Amplitudes = std::array<Complex, kBasisSize>;
using RealMatrix = std::array<std::array<double, kBasisSize>, kBasisSize>;

RealMatrix generator_at(double s, const ModelParams& params) {
  const auto pulse = pulse_amplitudes(s, params);
  const auto m = coefficient_matrix(pulse.g1_tau, pulse.g2_tau, params);
  RealMatrix out{};
  for (std::size_t i = 0; i < kBasisSize; ++i)
    for (std::size_t j = 0; j < kBasisSize; ++j) out[i][j] = m(i, j).real();
  return out;
}

// -i M d
Amplitudes derivative(const RealMatrix& m, const Amplitudes& d) {
  Amplitudes out{};
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < kBasisSize; ++j)
      if (m[i][j] != 0.0) acc += m[i][j] * d[j];
    out[i] = Complex(acc.imag(), -acc.real());
  }
  return out;
}

Amplitudes axpy(const Amplitudes& d, double h, const Amplitudes& k) {
  Amplitudes out;
  for (std::size_t i = 0; i < kBasisSize; ++i) out[i] = d[i] + h * k[i];
  return out;
}

// Signed step; h < 0 integrates backwards in time.
Amplitudes rk4(const Amplitudes& d, double s, double h, const ModelParams& params) {
  const auto m0 = generator_at(s, params);
  const auto mh = generator_at(s + 0.5 * h, params);
  const auto m1 = generator_at(s + h, params);
  const auto k1 = derivative(m0, d);
  const auto k2 = derivative(mh, axpy(d, 0.5 * h, k1));
  const auto k3 = derivative(mh, axpy(d, 0.5 * h, k2));
  const auto k4 = derivative(m1, axpy(d, h, k3));
  Amplitudes out;
  for (std::size_t i = 0; i < kBasisSize; ++i)
    out[i] = d[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

void check_finite(const Amplitudes& d, double s) {
  for (const auto& a : d)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      std::ostringstream msg;
      msg << "non-finite amplitude at s = " << s;
      throw IntegrationError(msg.str());
    }
}

double norm_of(const Amplitudes& d) {
  double s = 0.0;
  for (const auto& a : d) s += std::norm(a);
  return std::sqrt(s);
}

TrajectoryFrame make_frame(double s, const StateVector& state, const ModelParams& params) {
  TrajectoryFrame frame;
  frame.s = s;
  frame.state = state;
  const auto pulse = pulse_amplitudes(s, params);
  frame.g1_tau = pulse.g1_tau;
  frame.g2_tau = pulse.g2_tau;
  frame.dark_overlap = adiabatic_overlap(frame, params);
  return frame;
}

}  // namespace

StateVector step(const StateVector& state, double s, double h, const ModelParams& params) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("step size must be positive");
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "step needs a normalized state (||d|| = " << norm << ")";
    throw std::invalid_argument(msg.str());
  }
  StateVector out = state;
  out.amplitudes = rk4(state.amplitudes, s, h, params);
  check_finite(out.amplitudes, s);
  return out;
}

std::vector<TrajectoryFrame> evolve(const ModelParams& params, const TimeGrid& grid) {
  params.validate();
  grid.validate();
  const double h = grid.step_size();

  StateVector psi = initial_state(params);
  std::vector<TrajectoryFrame> frames;
  frames.reserve(grid.steps / grid.record_every + 2);
  frames.push_back(make_frame(grid.s_start, psi, params));

  for (int k = 1; k <= grid.steps; ++k) {
    const double s = grid.s_start + (k - 1) * h;
    psi.amplitudes = rk4(psi.amplitudes, s, h, params);
    const double s_next = grid.s_start + k * h;
    check_finite(psi.amplitudes, s_next);
    const double drift = std::abs(norm_of(psi.amplitudes) - 1.0);
    if (drift > 1e-6) {
      std::ostringstream msg;
      msg << "norm drift " << drift << " at s = " << s_next << "; use a smaller step (more steps)";
      throw IntegrationError(msg.str());
    }
    if (k % grid.record_every == 0 || k == grid.steps) frames.push_back(make_frame(s_next, psi, params));
  }
  return frames;
}

StateVector evolve_backward(const StateVector& state, const ModelParams& params, const TimeGrid& grid) {
  params.validate();
  grid.validate();
  const double h = grid.step_size();
  StateVector psi = state;
  for (int k = grid.steps; k >= 1; --k) {
    const double s = grid.s_start + k * h;
    psi.amplitudes = rk4(psi.amplitudes, s, -h, params);
    check_finite(psi.amplitudes, s - h);
  }
  return psi;
}

std::optional<double> adiabatic_overlap(const TrajectoryFrame& frame, const ModelParams& params) {
  const auto pulse = pulse_amplitudes(frame.s, params);
  const auto dark = dark_state(pulse.g1_tau, pulse.g2_tau, params);
  if (!dark.defined) return std::nullopt;
  Complex inner = 0.0;
  const auto v = dark.to_vector();
  for (std::size_t i = 0; i < kBasisSize; ++i) inner += std::conj(v[i]) * frame.state.amplitudes[i];
  return std::min(1.0, std::norm(inner));
}

}  // namespace stirap
