#pragma once

#include <functional>
#include <vector>

#include "aqcsim/hamiltonian.hpp"
#include "aqcsim/models.hpp"
#include "aqcsim/schedule.hpp"
#include "aqcsim/spectral.hpp"
#include "aqcsim/state.hpp"

namespace aqcsim {

/// ceil(200 * T): a time step of about 0.005.
int default_num_steps(double total_time);

struct EvolutionParams {
  double total_time = 20.0;  // T, with hbar = 1
  int num_steps = 0;         // 0 selects default_num_steps(total_time)
  int sample_count = 201;    // uniform in s, endpoints included
  int num_levels = 0;        // lowest eigenvalues of H(s) recorded per sample
  double krylov_tolerance = 1e-13;
  int krylov_max_dim = 40;
  double norm_abort = 1e-4;  // |<psi|psi> - 1| beyond this aborts the run
  EigenSolverOptions eigen{};
};

struct EvolutionSample {
  double s = 0.0;
  double lambda = 0.0;  // +inf where g(s) = 0
  double f = 0.0;
  double g = 0.0;
  std::vector<double> energies;  // num_levels lowest eigenvalues of H(s)
  double energy = 0.0;           // <psi|H(s)|psi>
  double f_ghz = 0.0;            // |<GHZ|psi>|^2
  double f_p = 0.0;              // |<P|psi>|^2
  double f_ferro = 0.0;          // |<F_up|psi>|^2 + |<F_down|psi>|^2
  double entropy = 0.0;          // single-site entropy of site 1, in bits
  double norm_error = 0.0;       // | ||psi||^2 - 1 |
};

struct EvolutionTrace {
  std::vector<EvolutionSample> samples;
  std::vector<double> transitions;  // s values with lambda(s) = 1
  StateVector final_state{1};
  int steps_taken = 0;
};

/// Weights (f, g) as a function of s; lets callers drive the integrator with
/// something other than the three named schedules (tests freeze H this way).
using CoefficientPath = std::function<Coefficients(double)>;

/// Integrates i d|psi>/dt = H(t/T)|psi>, H(s) = f(s) h0 + g(s) hp, from s = 0
/// to 1 with a fourth-order commutator-free Magnus scheme: per step, two
/// exponentials of fixed linear combinations of H at the Gauss-Legendre
/// nodes. Each exponential is applied by KrylovPropagator.
///
/// Throws InvalidArgument for a non-normalized psi0 or bad params,
/// DimensionMismatch, NormDriftError when the norm leaves 1 by norm_abort.
EvolutionTrace evolve(const Hamiltonian& h0, const Hamiltonian& hp, const Schedule& schedule,
                      const EvolutionParams& params, const StateVector& psi0);
EvolutionTrace evolve(const Hamiltonian& h0, const Hamiltonian& hp, const CoefficientPath& path,
                      const EvolutionParams& params, const StateVector& psi0);

/// Ground state of H(0) for the schedule: |P> when the run starts at the
/// driver (forward and roundtrip), |GHZ> when it starts at the problem
/// Hamiltonian (reversed linear/square).
StateVector default_initial_state(int n_sites, const Schedule& schedule);

/// |P> -> GHZ -> |P> along the roundtrip schedule. The trace carries F_P and
/// the two lambda = 1 crossings at s = (2 -+ sqrt 2) / 4.
EvolutionTrace evolve_roundtrip(const ModelParams& model, const EvolutionParams& params);

}  // namespace aqcsim
