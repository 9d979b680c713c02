#include "stirap/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stirap {

using Subset = std::span<const SubsystemId>;

SubsystemEntropies::SubsystemEntropies(const LabeledDensityMatrix& rho)
    : subsystems_(rho.subsystems()), by_mask_(1u << rho.subsystems().size(), 0.0) {
  const unsigned full = static_cast<unsigned>(by_mask_.size()) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (mask == full) {
      by_mask_[mask] = von_neumann_entropy(rho);
      continue;
    }
    std::vector<SubsystemId> keep;
    for (std::size_t s = 0; s < subsystems_.size(); ++s)
      if (mask & (1u << s)) keep.push_back(subsystems_[s]);
    by_mask_[mask] = von_neumann_entropy(partial_trace(rho, keep));
  }
}

unsigned SubsystemEntropies::mask_of(Subset subset) const {
  if (subset.empty()) throw std::invalid_argument("entropy of an empty subsystem set requested");
  unsigned mask = 0;
  for (const auto id : subset) {
    const auto it = std::find(subsystems_.begin(), subsystems_.end(), id);
    if (it == subsystems_.end())
      throw std::invalid_argument("subsystem " + std::string(to_string(id)) + " is not part of the state");
    mask |= 1u << (it - subsystems_.begin());
  }
  return mask;
}

double SubsystemEntropies::of(Subset subset) const { return by_mask_[mask_of(subset)]; }

namespace {

SubsystemEntropies entropies_of(const TrajectoryFrame& frame) {
  return SubsystemEntropies(pure_density(frame.state));
}

void require_disjoint(Subset first, Subset second) {
  if (first.empty() || second.empty()) throw std::invalid_argument("subsystem sets must be non-empty");
  for (const auto id : first)
    if (std::find(second.begin(), second.end(), id) != second.end())
      throw std::invalid_argument("subsystem sets must be disjoint; " + std::string(to_string(id)) +
                                  " appears in both");
}

std::vector<SubsystemId> join(Subset first, Subset second) {
  std::vector<SubsystemId> out(first.begin(), first.end());
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace

double joint_entropy(const TrajectoryFrame& frame, Subset subsystems) {
  const auto rho = pure_density(frame.state);
  if (subsystems.empty()) throw std::invalid_argument("entropy of an empty subsystem set requested");
  bool all = true;
  for (const auto id : rho.subsystems())
    all = all && std::find(subsystems.begin(), subsystems.end(), id) != subsystems.end();
  if (all) {
    // Still validate the ids the caller passed.
    for (const auto id : subsystems)
      if (rho.slot_of(id) < 0)
        throw std::invalid_argument("subsystem " + std::string(to_string(id)) + " is not part of the state");
    return von_neumann_entropy(rho);
  }
  return von_neumann_entropy(partial_trace(rho, subsystems));
}

EntropyReport ssi_parameter(const SubsystemEntropies& h, double s) {
  using enum SubsystemId;
  EntropyReport r;
  r.s = s;
  r.S_A = h.of({AtomA});
  r.S_AB = h.of({AtomA, AtomB});
  r.S_An = h.of({AtomA, ModeA});
  r.S_ABn = h.of({AtomA, AtomB, ModeA});
  r.E = r.S_AB + r.S_An - r.S_ABn - r.S_A;
  r.Ic_AB = r.S_A + h.of({AtomB}) - r.S_AB;
  r.araki_lieb_ok = araki_lieb_check(h, AtomA, AtomB).ok;
  r.ssi_ok = r.E >= -kInequalityTolerance;
  return r;
}

EntropyReport ssi_parameter(const TrajectoryFrame& frame) { return ssi_parameter(entropies_of(frame), frame.s); }

double index_of_correlation(const TrajectoryFrame& frame, SubsystemId first, SubsystemId second) {
  if (first == second) throw std::invalid_argument("index of correlation needs two distinct subsystems");
  const auto h = entropies_of(frame);
  return h.of({first}) + h.of({second}) - h.of({first, second});
}

ArakiLiebBounds araki_lieb_check(const SubsystemEntropies& h, SubsystemId first, SubsystemId second) {
  if (first == second) throw std::invalid_argument("Araki-Lieb check needs two distinct subsystems");
  const double s1 = h.of({first});
  const double s2 = h.of({second});
  ArakiLiebBounds b;
  b.lower = std::abs(s1 - s2);
  b.joint = h.of({first, second});
  b.upper = s1 + s2;
  b.ok = b.lower <= b.joint + kInequalityTolerance && b.joint <= b.upper + kInequalityTolerance;
  return b;
}

ArakiLiebBounds araki_lieb_check(const TrajectoryFrame& frame, SubsystemId first, SubsystemId second) {
  return araki_lieb_check(entropies_of(frame), first, second);
}

double conditional_entropy(const SubsystemEntropies& h, Subset target, Subset given) {
  require_disjoint(target, given);
  return h.of(join(target, given)) - h.of(given);
}

double conditional_entropy(const TrajectoryFrame& frame, Subset target, Subset given) {
  return conditional_entropy(entropies_of(frame), target, given);
}

double mutual_information(const SubsystemEntropies& h, Subset first, Subset second) {
  require_disjoint(first, second);
  return h.of(first) + h.of(second) - h.of(join(first, second));
}

double mutual_information(const TrajectoryFrame& frame, Subset first, Subset second) {
  return mutual_information(entropies_of(frame), first, second);
}

double ssi_gap(const SubsystemEntropies& h, Subset a, Subset b, Subset c) {
  require_disjoint(a, b);
  require_disjoint(b, c);
  require_disjoint(a, c);
  const auto ab = join(a, b);
  return h.of(ab) + h.of(join(b, c)) - h.of(join(ab, c)) - h.of(b);
}

namespace {

// Embeds an operator on `reduced` into rho's labeled basis as op (x) I.
ComplexMatrix lift(const ComplexMatrix& op, const LabeledDensityMatrix& reduced, const LabeledDensityMatrix& rho) {
  const auto& subs = rho.subsystems();
  std::vector<int> reduced_slot(subs.size(), -1);
  for (std::size_t s = 0; s < subs.size(); ++s) reduced_slot[s] = reduced.slot_of(subs[s]);

  const std::size_t n = rho.dim();
  std::vector<int> row_in_reduced(n);
  std::vector<Label> rest(n);
  for (std::size_t i = 0; i < n; ++i) {
    Label part(reduced.subsystems().size());
    for (std::size_t s = 0; s < subs.size(); ++s) {
      if (reduced_slot[s] >= 0)
        part[reduced_slot[s]] = rho.labels()[i][s];
      else
        rest[i].push_back(rho.labels()[i][s]);
    }
    row_in_reduced[i] = reduced.index_of(part);
    if (row_in_reduced[i] < 0) throw std::invalid_argument("reduced density lacks a label of the full state");
  }

  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rest[i] == rest[j]) out(i, j) = op(row_in_reduced[i], row_in_reduced[j]);
  return out;
}

void require_partition(const LabeledDensityMatrix& rho, const Partition& p) {
  if (p.a.empty() || p.b.empty() || p.c.empty()) throw std::invalid_argument("partition groups must be non-empty");
  std::vector<SubsystemId> all = p.a;
  all.insert(all.end(), p.b.begin(), p.b.end());
  all.insert(all.end(), p.c.begin(), p.c.end());
  if (all.size() != rho.subsystems().size())
    throw std::invalid_argument("partition does not cover the density matrix's subsystems exactly");
  for (const auto id : rho.subsystems())
    if (std::count(all.begin(), all.end(), id) != 1)
      throw std::invalid_argument("partition does not match subsystem " + std::string(to_string(id)));
}

}  // namespace

EqualityCheck equality_condition_check(const LabeledDensityMatrix& rho, const Partition& p) {
  require_partition(rho, p);
  const auto ab = partial_trace(rho, join(p.a, p.b));
  const auto bc = partial_trace(rho, join(p.b, p.c));
  const auto b = partial_trace(rho, p.b);

  const ComplexMatrix lhs = support_log2(rho) - lift(support_log2(ab), ab, rho);
  const ComplexMatrix rhs = lift(support_log2(bc), bc, rho) - lift(support_log2(b), b, rho);
  const ComplexMatrix support = support_projector(rho);

  EqualityCheck out;
  out.residual = (support * (lhs - rhs) * support).max_abs();

  // ||(I - Q) P||_F^2 = tr P - tr(P Q P) for projectors P, Q.
  const double rank = support.trace().real();
  for (const auto* reduced : {&ab, &bc, &b}) {
    const auto q = lift(support_projector(*reduced), *reduced, rho);
    const double leak = rank - (support * q * support).trace().real();
    if (leak > 1e-9) out.supports_compatible = false;
  }
  return out;
}

double equality_condition_residual(const LabeledDensityMatrix& rho, const Partition& partition) {
  return equality_condition_check(rho, partition).residual;
}

LabeledState ghz_state() {
  LabeledState psi;
  psi.subsystems.assign(std::begin(kAllSubsystems), std::end(kAllSubsystems));
  for (int bits = 0; bits < 16; ++bits) {
    psi.labels.push_back({(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1});
    psi.amplitudes.push_back(bits == 0 || bits == 15 ? Complex(1.0 / std::sqrt(2.0)) : Complex(0.0));
  }
  return psi;
}

LabeledDensityMatrix ghz_reduced_density() {
  using enum SubsystemId;
  const SubsystemId keep[] = {AtomA, AtomB, ModeA};
  return partial_trace(pure_density(ghz_state()), keep);
}

GhzReport ghz_report() {
  using enum SubsystemId;
  const auto rho = ghz_reduced_density();
  const SubsystemEntropies h(rho);
  GhzReport r;
  r.S_ABC = h.of({AtomA, AtomB, ModeA});
  r.S_A = h.of({AtomA});
  r.S_AB = h.of({AtomA, AtomB});
  r.S_BC = h.of({AtomB, ModeA});
  r.S_AC = h.of({AtomA, ModeA});
  r.E = r.S_AB + r.S_AC - r.S_ABC - r.S_A;
  r.equality = equality_condition_check(rho, {{AtomA}, {AtomB}, {ModeA}});
  return r;
}

}  // namespace stirap
