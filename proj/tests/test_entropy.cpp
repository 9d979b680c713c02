#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "stirap/entropy.hpp"
#include "test_support.hpp"

namespace stirap {
namespace {

using enum SubsystemId;

const std::vector<TrajectoryFrame>& trajectory(double delta_tau) {
  static const auto run = [](double dt) {
    ModelParams p;
    p.delta_tau = dt;
    return evolve(p, TimeGrid::default_for(p, 12000, 40));
  };
  static const auto resonant = run(0.0);
  static const auto detuned = run(60.0);
  return delta_tau == 0.0 ? resonant : detuned;
}

const TrajectoryFrame& frame_near(double delta_tau, double s) {
  const auto& frames = trajectory(delta_tau);
  return *std::min_element(frames.begin(), frames.end(),
                           [s](const auto& a, const auto& b) { return std::abs(a.s - s) < std::abs(b.s - s); });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

LabeledDensityMatrix three_qubits(const ComplexMatrix& m) {
  return {testing::first_slots(3), testing::qubit_labels(3), m};
}

const Partition kAbc{{AtomA}, {AtomB}, {ModeA}};

TEST(JointEntropy, GlobalStateIsPure) {
  for (const auto& f : trajectory(60.0)) EXPECT_NEAR(joint_entropy(f, kAllSubsystems), 0.0, 1e-9);
}

TEST(JointEntropy, InitialAtomsAreProduct) {
  const SubsystemId atoms[] = {AtomA, AtomB};
  EXPECT_NEAR(joint_entropy(trajectory(0.0).front(), atoms), 0.0, 1e-12);
}

TEST(JointEntropy, AtomsMatchModes) {
  const SubsystemId atoms[] = {AtomA, AtomB};
  const SubsystemId modes[] = {ModeA, ModeB};
  for (const auto& f : trajectory(60.0)) EXPECT_NEAR(joint_entropy(f, atoms), joint_entropy(f, modes), 1e-9);
}

TEST(JointEntropy, RejectsEmptySubset) {
  EXPECT_THROW(joint_entropy(trajectory(0.0).front(), std::span<const SubsystemId>{}), std::invalid_argument);
}

TEST(SsiParameter, InitialFrameIsZero) {
  const auto r = ssi_parameter(trajectory(0.0).front());
  EXPECT_NEAR(r.E, 0.0, 1e-9);
  EXPECT_TRUE(r.ssi_ok);
  EXPECT_TRUE(r.araki_lieb_ok);
}

TEST(SsiParameter, ReportFieldsAreConsistent) {
  for (const auto& f : trajectory(60.0)) {
    const auto r = ssi_parameter(f);
    EXPECT_EQ(r.E, r.S_AB + r.S_An - r.S_ABn - r.S_A);
    EXPECT_EQ(r.ssi_ok, r.E >= -1e-9);
    EXPECT_EQ(r.s, f.s);
  }
}

TEST(SsiParameter, VanishesAfterResonantTransfer) {
  EXPECT_LE(ssi_parameter(trajectory(0.0).back()).E, 1e-3);
}

TEST(SsiParameter, PersistsAfterDetunedTransfer) {
  const double e0 = ssi_parameter(trajectory(0.0).back()).E;
  const double e60 = ssi_parameter(trajectory(60.0).back()).E;
  EXPECT_GT(e60, e0);
  // Converged value; 12000 and 24000 steps agree to ~1e-11.
  EXPECT_NEAR(e60, 0.0492519, 1e-6);
}

TEST(SsiParameter, NonNegativeAlongBothTrajectories) {
  for (const double dt : {0.0, 60.0})
    for (const auto& f : trajectory(dt)) EXPECT_GE(ssi_parameter(f).E, -1e-9) << "s=" << f.s;
}

TEST(IndexOfCorrelation, InitialAndFinal) {
  EXPECT_NEAR(index_of_correlation(trajectory(0.0).front(), AtomA, AtomB), 0.0, 1e-12);
  EXPECT_LE(index_of_correlation(trajectory(0.0).back(), AtomA, AtomB), 1e-3);
}

TEST(IndexOfCorrelation, PositiveMidPulse) {
  const auto& mid = frame_near(0.0, 2.0 / 3.0);
  EXPECT_GT(index_of_correlation(mid, AtomA, AtomB), 0.1);
}

TEST(IndexOfCorrelation, BoundsOnEveryFrame) {
  for (const auto& f : trajectory(60.0)) {
    const SubsystemEntropies h(pure_density(f.state));
    const double ic = index_of_correlation(f, AtomA, AtomB);
    EXPECT_GE(ic, -1e-9);
    EXPECT_LE(ic, 2.0 * std::min(h.of({AtomA}), h.of({AtomB})) + 1e-9);
  }
}

TEST(IndexOfCorrelation, RejectsSameSubsystem) {
  EXPECT_THROW(index_of_correlation(trajectory(0.0).front(), AtomA, AtomA), std::invalid_argument);
}

TEST(ArakiLieb, HoldsForEveryPairOnEveryFrame) {
  for (const double dt : {0.0, 60.0})
    for (const auto& f : trajectory(dt)) {
      const SubsystemEntropies h(pure_density(f.state));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) EXPECT_TRUE(araki_lieb_check(h, kAllSubsystems[i], kAllSubsystems[j]).ok);
    }
}

TEST(ArakiLieb, ProductFrameIsAllZero) {
  const auto b = araki_lieb_check(trajectory(0.0).front(), AtomA, AtomB);
  EXPECT_NEAR(b.lower, 0.0, 1e-12);
  EXPECT_NEAR(b.joint, 0.0, 1e-12);
  EXPECT_NEAR(b.upper, 0.0, 1e-12);
  EXPECT_TRUE(b.ok);
}

TEST(ArakiLieb, MidTransferIsStrictlySubadditive) {
  const auto b = araki_lieb_check(frame_near(0.0, 2.0 / 3.0), AtomA, AtomB);
  EXPECT_LT(b.joint + 0.1, b.upper);
}

TEST(ConditionalEntropy, ProductFrameIsZero) {
  const SubsystemId a[] = {AtomA};
  const SubsystemId b[] = {AtomB};
  EXPECT_NEAR(conditional_entropy(trajectory(0.0).front(), a, b), 0.0, 1e-12);
}

TEST(ConditionalEntropy, ConditioningReducesEntropy) {
  const SubsystemId a[] = {AtomA};
  const SubsystemId b[] = {AtomB};
  const SubsystemId bn[] = {AtomB, ModeA};
  for (const double dt : {0.0, 60.0})
    for (const auto& f : trajectory(dt)) {
      const SubsystemEntropies h(pure_density(f.state));
      EXPECT_LE(conditional_entropy(h, a, bn), conditional_entropy(h, a, b) + 1e-9);
    }
}

TEST(ConditionalEntropy, SubadditiveGivenMode) {
  const SubsystemId a[] = {AtomA};
  const SubsystemId b[] = {AtomB};
  const SubsystemId ab[] = {AtomA, AtomB};
  const SubsystemId n[] = {ModeA};
  for (const auto& f : trajectory(60.0)) {
    const SubsystemEntropies h(pure_density(f.state));
    EXPECT_LE(conditional_entropy(h, ab, n), conditional_entropy(h, a, n) + conditional_entropy(h, b, n) + 1e-9);
  }
}

TEST(ConditionalEntropy, GhzAGivenBIsZero) {
  const SubsystemEntropies h(ghz_reduced_density());
  const SubsystemId a[] = {AtomA};
  const SubsystemId b[] = {AtomB};
  EXPECT_NEAR(conditional_entropy(h, a, b), 0.0, 1e-12);
}

TEST(ConditionalEntropy, RejectsOverlap) {
  const SubsystemId a[] = {AtomA};
  const SubsystemId ab[] = {AtomA, AtomB};
  EXPECT_THROW(conditional_entropy(trajectory(0.0).front(), a, ab), std::invalid_argument);
}

TEST(MutualInformation, ProductFrameIsZero) {
  const SubsystemId a[] = {AtomA};
  const SubsystemId b[] = {AtomB};
  EXPECT_NEAR(mutual_information(trajectory(0.0).front(), a, b), 0.0, 1e-12);
}

TEST(MutualInformation, SingletonsMatchIndexOfCorrelation) {
  const SubsystemId a[] = {AtomA};
  const SubsystemId n[] = {ModeA};
  for (const auto& f : trajectory(60.0))
    EXPECT_NEAR(mutual_information(f, a, n), index_of_correlation(f, AtomA, ModeA), 1e-14);
}

TEST(MutualInformation, DiscardingNeverIncreases) {
  const SubsystemId a[] = {AtomA};
  const SubsystemId b[] = {AtomB};
  const SubsystemId bn[] = {AtomB, ModeA};
  for (const double dt : {0.0, 60.0})
    for (const auto& f : trajectory(dt)) {
      const SubsystemEntropies h(pure_density(f.state));
      EXPECT_LE(mutual_information(h, a, b), mutual_information(h, a, bn) + 1e-9);
    }
}

TEST(MutualInformation, GhzPairIsOneBit) {
  const SubsystemEntropies h(ghz_reduced_density());
  const SubsystemId a[] = {AtomA};
  const SubsystemId b[] = {AtomB};
  EXPECT_NEAR(mutual_information(h, a, b), 1.0, 1e-12);
}

TEST(EqualityCondition, MaximallyMixedProduct) {
  const auto rho = three_qubits(ComplexMatrix::identity(8) * 0.125);
  const auto check = equality_condition_check(rho, kAbc);
  EXPECT_LE(check.residual, 1e-9);
  EXPECT_TRUE(check.supports_compatible);
}

TEST(EqualityCondition, GenericProductStates) {
  std::mt19937_64 rng(21);
  for (int draw = 0; draw < 20; ++draw) {
    const auto m = kron(kron(testing::random_density(rng, 2, 2), testing::random_density(rng, 2, 2)),
                        testing::random_density(rng, 2, 2));
    EXPECT_LE(equality_condition_residual(three_qubits(m), kAbc), 1e-9);
  }
}

TEST(EqualityCondition, GhzReductionSatisfiesIt) {
  const auto check = equality_condition_check(ghz_reduced_density(), kAbc);
  EXPECT_LE(check.residual, 1e-9);
  EXPECT_TRUE(check.supports_compatible);
}

TEST(EqualityCondition, CorrelatedStatesViolateIt) {
  std::mt19937_64 rng(22);
  int violations = 0;
  constexpr int kDraws = 50;
  for (int draw = 0; draw < kDraws; ++draw) {
    const auto check = equality_condition_check(three_qubits(testing::random_density(rng, 8, 8)), kAbc);
    EXPECT_TRUE(check.supports_compatible);
    if (check.residual > 0.1) ++violations;
  }
  EXPECT_GE(violations, kDraws * 9 / 10);
}

TEST(EqualityCondition, RejectsMismatchedPartition) {
  const auto rho = ghz_reduced_density();
  EXPECT_THROW(equality_condition_residual(rho, {{AtomA}, {AtomB}, {ModeB}}), std::invalid_argument);
  EXPECT_THROW(equality_condition_residual(rho, {{AtomA}, {AtomB}, {}}), std::invalid_argument);
  EXPECT_THROW(equality_condition_residual(rho, {{AtomA}, {AtomA, AtomB}, {ModeA}}), std::invalid_argument);
}

TEST(Ghz, ReportValues) {
  const auto r = ghz_report();
  EXPECT_NEAR(r.S_ABC, 1.0, 1e-12);
  EXPECT_NEAR(r.S_A, 1.0, 1e-12);
  EXPECT_NEAR(r.S_AB, 1.0, 1e-12);
  EXPECT_NEAR(r.S_BC, 1.0, 1e-12);
  EXPECT_NEAR(r.E, 0.0, 1e-12);
  EXPECT_NEAR(ghz_reduced_density().matrix().trace().real(), 1.0, 1e-15);
}

TEST(Ghz, SsiGapMatchesReport) {
  const SubsystemEntropies h(ghz_reduced_density());
  const SubsystemId a[] = {AtomA}, b[] = {AtomB}, c[] = {ModeA};
  EXPECT_NEAR(ssi_gap(h, b, a, c), ghz_report().E, 1e-15);
  EXPECT_NEAR(ssi_gap(h, a, b, c), 0.0, 1e-12);
}

TEST(SchmidtOracle, TwoQubitPureStates) {
  std::mt19937_64 rng(23);
  const SubsystemId a[] = {AtomA};
  for (int draw = 0; draw < 100; ++draw) {
    const auto v = testing::random_unit_vector(rng, 4);
    const LabeledState psi{testing::first_slots(2), testing::qubit_labels(2), v};
    const double expected = testing::schmidt_entropy_2x2(v[0], v[1], v[2], v[3]);
    EXPECT_NEAR(von_neumann_entropy(partial_trace(pure_density(psi), a)), expected, 1e-10);
  }
}

TEST(LocalPhaseInvariance, RotatingAndLabFrameAgree) {
  ModelParams p;
  p.delta_tau = 60.0;
  for (const auto& f : trajectory(60.0)) {
    const SubsystemEntropies d(pure_density(f.state));
    const SubsystemEntropies c(pure_density(to_lab_frame(f.state, f.s, p)));
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<SubsystemId> keep;
      for (int s = 0; s < 4; ++s)
        if (mask & (1u << s)) keep.push_back(kAllSubsystems[s]);
      EXPECT_NEAR(d.of(keep), c.of(keep), 1e-10);
    }
  }
}

}  // namespace
}  // namespace stirap
