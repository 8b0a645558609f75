#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "aqcsim/errors.hpp"
#include "aqcsim/evolution.hpp"
#include "aqcsim/krylov_propagator.hpp"
#include "aqcsim/models.hpp"
#include "aqcsim/observables.hpp"
#include "aqcsim/operator.hpp"
#include "oracle/oracle.hpp"

using namespace aqcsim;

namespace {

oracle::CVec to_eigen(const StateVector& v) {
  oracle::CVec out(static_cast<Eigen::Index>(v.dimension()));
  for (std::size_t i = 0; i < v.dimension(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

std::function<std::pair<double, double>(double)> oracle_path(const Schedule& s) {
  return [s](double x) {
    const auto c = s.coefficients(x);
    return std::pair{c.f, c.g};
  };
}

double max_diff(const StateVector& a, const oracle::CVec& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
  return worst;
}

EvolutionParams params_for(double T, int steps, int samples = 2) {
  EvolutionParams p;
  p.total_time = T;
  p.num_steps = steps;
  p.sample_count = samples;
  return p;
}

}  // namespace

TEST(Krylov, MatchesExactPropagator) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> d;
  const auto h = build_xy_chain({7, 0.35, 0.8});
  StateVector psi(7);
  double norm = 0;
  for (auto& a : psi.amplitudes()) {
    a = {d(rng), d(rng)};
    norm += std::norm(a);
  }
  psi *= 1 / std::sqrt(norm);
  const auto start = to_eigen(psi);
  const CompiledOperator op(h);
  KrylovPropagator prop(psi.dimension());
  for (double tau : {0.01, 0.3, 2.5}) {
    auto v = psi;
    prop.propagate(op, tau, v);
    const auto ref = oracle::exact_propagate(oracle::real_part(oracle::kron_xy_chain(7, 0.35, 0.8)), tau, start);
    EXPECT_LE(max_diff(v, ref), 1e-11) << tau;
    EXPECT_NEAR(v.norm_squared(), 1.0, 1e-13);
  }
}

TEST(Krylov, EigenstatePicksUpPhaseOnly) {
  const CompiledOperator op(transverse_driver(5));
  KrylovPropagator prop(32);
  auto v = make_paramagnetic(5);
  prop.propagate(op, 0.7, v);
  const auto expect = std::polar(1.0, 5 * 0.7);  // exp(-i * (-5) * 0.7)
  for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(std::abs(v[i] - expect * make_paramagnetic(5)[i]), 0.0, 1e-13);
}

TEST(Krylov, SmallSubspaceForcesSubstepping) {
  const auto h = build_xy_chain({8, 0.5, 1.0});
  const CompiledOperator op(h);
  auto a = make_paramagnetic(8), b = a;
  KrylovPropagator tight(a.dimension(), 6), loose(a.dimension(), 40);
  tight.propagate(op, 3.0, a);
  loose.propagate(op, 3.0, b);
  double worst = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  EXPECT_LE(worst, 1e-10);
}

TEST(Evolution, DefaultStepCount) {
  EXPECT_EQ(default_num_steps(20.0), 4000);
  EXPECT_EQ(default_num_steps(0.01), 2);
  EXPECT_EQ(default_num_steps(100.0), 20000);
}

TEST(Evolution, RejectsBadInputs) {
  const auto split = split_driver_problem(XYParams{4, 1.0, 0.0});
  auto psi = make_paramagnetic(4);
  EXPECT_THROW(evolve(split.h0, split.hp, Schedule::linear(), params_for(-1, 10), psi), InvalidArgument);
  EXPECT_THROW(evolve(split.h0, split.hp, Schedule::linear(), params_for(1, 10, 1), psi), InvalidArgument);
  EXPECT_THROW(evolve(split.h0, split.hp, Schedule::linear(), params_for(1, -3), psi), InvalidArgument);
  auto scaled = psi;
  scaled *= 1.01;
  EXPECT_THROW(evolve(split.h0, split.hp, Schedule::linear(), params_for(1, 10), scaled), InvalidArgument);
  EXPECT_THROW(evolve(split.h0, split.hp, Schedule::linear(), params_for(1, 10), make_paramagnetic(5)), DimensionMismatch);
}

TEST(Evolution, FrozenDriverKeepsParamagnet) {
  const auto split = split_driver_problem(XYParams{6, 1.0, 0.0});
  const auto p = make_paramagnetic(6);
  const CoefficientPath frozen = [](double) { return Coefficients{1.0, 0.0}; };
  const auto trace = evolve(split.h0, split.hp, frozen, params_for(10.0, 0, 101), p);
  ASSERT_EQ(trace.samples.size(), 101u);
  for (const auto& smp : trace.samples) {
    EXPECT_GE(smp.f_p, 1 - 1e-8) << smp.s;
    EXPECT_LE(smp.norm_error, 1e-12);
  }
}

TEST(Evolution, SamplesAreUniformAndCarryScheduleData) {
  const auto split = split_driver_problem(XYParams{5, 0.8, 0.0});
  auto params = params_for(2.0, 0, 11);
  params.num_levels = 3;
  const auto trace = evolve(split.h0, split.hp, Schedule::square(), params, make_paramagnetic(5));
  ASSERT_EQ(trace.samples.size(), 11u);
  EXPECT_EQ(trace.steps_taken, 400);
  for (std::size_t i = 0; i < 11; ++i) {
    const auto& smp = trace.samples[i];
    EXPECT_NEAR(smp.s, i / 10.0, 1e-15);
    EXPECT_EQ(smp.f, Schedule::square().coefficients(smp.s).f);
    EXPECT_EQ(smp.g, Schedule::square().coefficients(smp.s).g);
    EXPECT_EQ(smp.lambda, Schedule::square().lambda(smp.s));
    ASSERT_EQ(smp.energies.size(), 3u);
    EXPECT_LE(smp.energies[0], smp.energy + 1e-12);
  }
  EXPECT_TRUE(std::isinf(trace.samples.front().lambda));
  EXPECT_EQ(trace.samples.front().s, 0.0);
  EXPECT_EQ(trace.samples.back().s, 1.0);
  EXPECT_EQ(trace.transitions, std::vector<double>{0.5});
}

TEST(Evolution, MatchesRk4Reference) {
  const int n = 6;
  const auto split = split_driver_problem(XYParams{n, 0.6, 0.0});
  const auto trace = evolve(split.h0, split.hp, Schedule::square(), params_for(5.0, 0), make_paramagnetic(n));
  const auto ref = oracle::rk4_evolve(oracle::spin_driver(n), oracle::spin_xy_chain(n, 0.6, 0.0),
                                      oracle_path(Schedule::square()), 5.0, 20000, oracle::paramagnetic(n));
  EXPECT_LE(max_diff(trace.final_state, ref), 1e-8);
}

TEST(Evolution, SuddenQuenchLeavesStateInPlace) {
  const auto split = split_driver_problem(XYParams{4, 1.0, 0.0});
  const auto trace = evolve(split.h0, split.hp, Schedule::linear(), params_for(0.01, 0), make_paramagnetic(4));
  EXPECT_NEAR(trace.samples.back().f_ghz, 0.125, 0.01);
  const auto ref = oracle::rk4_evolve(oracle::spin_driver(4), oracle::spin_xy_chain(4, 1.0, 0.0),
                                      oracle_path(Schedule::linear()), 0.01, 100, oracle::paramagnetic(4));
  EXPECT_NEAR(trace.samples.back().f_ghz, oracle::overlap2(oracle::ghz(4), ref), 1e-10);
}

TEST(Evolution, GlobalPhaseDoesNotChangeObservables) {
  const auto split = split_driver_problem(XYParams{6, 0.9, 0.0});
  auto rotated = make_paramagnetic(6);
  rotated *= std::polar(1.0, 2.1);
  const auto a = evolve(split.h0, split.hp, Schedule::linear(), params_for(3.0, 0, 5), make_paramagnetic(6));
  const auto b = evolve(split.h0, split.hp, Schedule::linear(), params_for(3.0, 0, 5), rotated);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(a.samples[i].f_ghz, b.samples[i].f_ghz, 1e-13);
    EXPECT_NEAR(a.samples[i].f_p, b.samples[i].f_p, 1e-13);
    EXPECT_NEAR(a.samples[i].entropy, b.samples[i].entropy, 1e-12);
    EXPECT_NEAR(a.samples[i].energy, b.samples[i].energy, 1e-12);
  }
}

TEST(Evolution, FidelityImprovesWithRunTime) {
  const auto split = split_driver_problem(XYParams{8, 1.0, 0.0});
  double prev = 0;
  for (double T : {5.0, 10.0, 20.0, 40.0}) {
    const double f = evolve(split.h0, split.hp, Schedule::square(), params_for(T, 0), make_paramagnetic(8)).samples.back().f_ghz;
    EXPECT_GE(f, prev - 0.02) << T;
    prev = f;
  }
  EXPECT_GT(prev, 0.9);
}

TEST(Evolution, FourthOrderConvergence) {
  const auto split = split_driver_problem(XYParams{6, 1.0, 0.0});
  const auto psi0 = make_paramagnetic(6);
  auto final_state = [&](int steps) {
    return evolve(split.h0, split.hp, Schedule::square(), params_for(5.0, steps), psi0).final_state;
  };
  const int base = 20;
  const auto ref = to_eigen(final_state(32 * base));
  std::vector<double> logh, loge;
  for (int m : {1, 2, 4}) {
    logh.push_back(std::log(1.0 / (base * m)));
    loge.push_back(std::log(max_diff(final_state(base * m), ref)));
  }
  const double slope = (loge[2] - loge[0]) / (logh[2] - logh[0]);
  EXPECT_NEAR(slope, 4.0, 0.8);
}

TEST(Evolution, DefaultInitialStates) {
  EXPECT_NEAR(fidelity(default_initial_state(5, Schedule::linear()), make_paramagnetic(5)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(default_initial_state(5, Schedule::roundtrip()), make_paramagnetic(5)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(default_initial_state(5, Schedule::square().reversed()), make_ghz(5)), 1.0, 1e-15);
}

TEST(Roundtrip, SuddenLimitReturnsToParamagnet) {
  const auto trace = evolve_roundtrip(XYParams{8, 0.8, 0.0}, params_for(0.01, 0, 3));
  EXPECT_GE(trace.samples.back().f_p, 0.99);
  ASSERT_EQ(trace.transitions.size(), 2u);
  EXPECT_NEAR(trace.transitions[0], (2 - std::sqrt(2.0)) / 4, 1e-12);
  EXPECT_NEAR(trace.transitions[1], (2 + std::sqrt(2.0)) / 4, 1e-12);
}

TEST(Roundtrip, GridModelRuns) {
  const auto trace = evolve_roundtrip(GridParams{2, 2, 0.0}, params_for(5.0, 0, 5));
  EXPECT_EQ(trace.samples.size(), 5u);
  for (const auto& smp : trace.samples) EXPECT_LE(smp.norm_error, 1e-10);
}

TEST(Evolution, GridGhzPreparation) {
  const auto split = split_driver_problem(GridParams{2, 3, 0.0});
  const auto trace = evolve(split.h0, split.hp, Schedule::linear(), params_for(30.0, 0), make_paramagnetic(6));
  const auto ref = oracle::rk4_evolve(oracle::spin_driver(6), oracle::spin_ising_grid(2, 3, 0.0),
                                      oracle_path(Schedule::linear()), 30.0, 30000, oracle::paramagnetic(6));
  EXPECT_NEAR(trace.samples.back().f_ghz, oracle::overlap2(oracle::ghz(6), ref), 1e-6);
}
