#include "aqcsim/evolution.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "aqcsim/errors.hpp"
#include "aqcsim/krylov_propagator.hpp"
#include "aqcsim/observables.hpp"
#include "aqcsim/operator.hpp"

namespace aqcsim {
namespace {

// Fourth-order commutator-free Magnus coefficients on the two Gauss nodes.
const double kNode1 = 0.5 - std::sqrt(3.0) / 6.0;
const double kNode2 = 0.5 + std::sqrt(3.0) / 6.0;
const double kWeightA = (3.0 - 2.0 * std::sqrt(3.0)) / 12.0;
const double kWeightB = (3.0 + 2.0 * std::sqrt(3.0)) / 12.0;

void check_params(const EvolutionParams& p) {
  if (!(p.total_time > 0.0) || !std::isfinite(p.total_time)) throw InvalidArgument("total time must be positive");
  if (p.num_steps < 0) throw InvalidArgument("num_steps must be >= 1 (or 0 for the default)");
  if (p.sample_count < 2) throw InvalidArgument("sample_count must be >= 2");
  if (p.num_levels < 0) throw InvalidArgument("num_levels must be >= 0");
}

class Sampler {
 public:
  Sampler(const Hamiltonian& h0, const Hamiltonian& hp, const CompiledOperator& c0, const CompiledOperator& cp,
          const EvolutionParams& params)
      : h0_(h0),
        hp_(hp),
        c0_(c0),
        cp_(cp),
        params_(params),
        ghz_(make_ghz(h0.num_sites())),
        para_(make_paramagnetic(h0.num_sites())) {}

  EvolutionSample operator()(double s, Coefficients c, double lambda, const StateVector& psi) const {
    EvolutionSample out;
    out.s = s;
    out.lambda = lambda;
    out.f = c.f;
    out.g = c.g;
    if (params_.num_levels > 0) {
      out.energies = lowest_eigenvalues(c.f * h0_ + c.g * hp_, params_.num_levels, params_.eigen);
    }
    out.energy = energy_expectation(CompiledOperator::combine(c.f, c0_, c.g, cp_), psi);
    out.f_ghz = fidelity(ghz_, psi);
    out.f_p = fidelity(para_, psi);
    out.f_ferro = ferro_subspace_weight(psi);
    out.entropy = single_site_entropy(psi, SiteIndex(1));
    out.norm_error = std::abs(psi.norm_squared() - 1.0);
    return out;
  }

 private:
  const Hamiltonian& h0_;
  const Hamiltonian& hp_;
  const CompiledOperator& c0_;
  const CompiledOperator& cp_;
  const EvolutionParams& params_;
  StateVector ghz_;
  StateVector para_;
};

double lambda_of(Coefficients c) {
  return c.g == 0.0 ? std::numeric_limits<double>::infinity() : c.f / c.g;
}

EvolutionTrace run(const Hamiltonian& h0, const Hamiltonian& hp, const CoefficientPath& path,
                   const std::function<double(double)>& lambda, const EvolutionParams& params,
                   const StateVector& psi0) {
  check_params(params);
  if (h0.num_sites() != hp.num_sites() || psi0.num_sites() != h0.num_sites()) {
    throw DimensionMismatch("h0, hp and psi0 must share one site count");
  }
  const double norm0 = psi0.norm_squared();
  if (std::abs(norm0 - 1.0) > 1e-10) {
    throw InvalidArgument("initial state is not normalized (|psi|^2 = " + std::to_string(norm0) + ")");
  }

  const CompiledOperator c0(h0);
  const CompiledOperator cp(hp);
  const Sampler sample(h0, hp, c0, cp, params);
  const auto& kernels = simd::active_kernels();
  KrylovPropagator propagator(psi0.dimension(), params.krylov_max_dim, params.krylov_tolerance);

  const int steps = params.num_steps > 0 ? params.num_steps : default_num_steps(params.total_time);
  const int segments = params.sample_count - 1;

  EvolutionTrace trace;
  StateVector psi = psi0;
  trace.samples.reserve(params.sample_count);
  trace.samples.push_back(sample(0.0, path(0.0), lambda(0.0), psi));

  for (int seg = 0; seg < segments; ++seg) {
    const double s_begin = static_cast<double>(seg) / segments;
    const double s_end = static_cast<double>(seg + 1) / segments;
    // Steps are spread over segments so that every sample lands on a step
    // boundary; each segment gets at least one.
    const long long lo = static_cast<long long>(seg) * steps / segments;
    const long long hi = static_cast<long long>(seg + 1) * steps / segments;
    const int seg_steps = static_cast<int>(std::max<long long>(1, hi - lo));
    const double ds = (s_end - s_begin) / seg_steps;
    const double dt = params.total_time * ds;

    for (int j = 0; j < seg_steps; ++j) {
      const double s0 = s_begin + j * ds;
      const Coefficients n1 = path(s0 + kNode1 * ds);
      const Coefficients n2 = path(s0 + kNode2 * ds);
      const auto first = CompiledOperator::combine(kWeightB * n1.f + kWeightA * n2.f, c0,
                                                   kWeightB * n1.g + kWeightA * n2.g, cp);
      propagator.propagate(first, dt, psi, kernels);
      const auto second = CompiledOperator::combine(kWeightA * n1.f + kWeightB * n2.f, c0,
                                                    kWeightA * n1.g + kWeightB * n2.g, cp);
      propagator.propagate(second, dt, psi, kernels);
      ++trace.steps_taken;

      const double drift = std::abs(psi.norm_squared() - 1.0);
      if (drift > params.norm_abort) {
        std::ostringstream msg;
        msg << "norm drift " << drift << " at s=" << s0 + ds << " exceeds " << params.norm_abort
            << " (time step " << dt << "); increase the step count";
        throw NormDriftError(msg.str());
      }
    }
    const double s = seg + 1 == segments ? 1.0 : s_end;
    trace.samples.push_back(sample(s, path(s), lambda(s), psi));
  }
  trace.final_state = std::move(psi);
  return trace;
}

}  // namespace

int default_num_steps(double total_time) {
  if (!(total_time > 0.0)) throw InvalidArgument("total time must be positive");
  return static_cast<int>(std::ceil(200.0 * total_time));
}

EvolutionTrace evolve(const Hamiltonian& h0, const Hamiltonian& hp, const Schedule& schedule,
                      const EvolutionParams& params, const StateVector& psi0) {
  auto trace = run(
      h0, hp, [&](double s) { return schedule.coefficients(s); }, [&](double s) { return schedule.lambda(s); },
      params, psi0);
  trace.transitions = schedule.critical_points();
  return trace;
}

EvolutionTrace evolve(const Hamiltonian& h0, const Hamiltonian& hp, const CoefficientPath& path,
                      const EvolutionParams& params, const StateVector& psi0) {
  return run(h0, hp, path, [&](double s) { return lambda_of(path(s)); }, params, psi0);
}

StateVector default_initial_state(int n_sites, const Schedule& schedule) {
  const Coefficients start = schedule.coefficients(0.0);
  if (start.g == 0.0) return make_paramagnetic(n_sites);
  if (start.f == 0.0) return make_ghz(n_sites);
  throw InvalidArgument("schedule does not start at a pure driver or problem Hamiltonian");
}

EvolutionTrace evolve_roundtrip(const ModelParams& model, const EvolutionParams& params) {
  const auto split = split_driver_problem(model);
  return evolve(split.h0, split.hp, Schedule::roundtrip(), params, make_paramagnetic(split.h0.num_sites()));
}

}  // namespace aqcsim
