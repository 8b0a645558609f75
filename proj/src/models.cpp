#include "aqcsim/models.hpp"

#include <cmath>
#include <string>

#include "aqcsim/errors.hpp"

namespace aqcsim {
namespace {

void check_sites(int n, const ResourceLimits& limits) {
  if (n > limits.max_sites) {
    throw CapExceeded(std::to_string(n) + " sites exceeds the configured maximum of " +
                      std::to_string(limits.max_sites));
  }
}

void check_lambda(double lambda) {
  if (!std::isfinite(lambda)) throw InvalidArgument("lambda must be finite");
  if (lambda < 0.0) throw InvalidArgument("lambda must be non-negative, got " + std::to_string(lambda));
}

void append_field(std::vector<PauliTerm>& terms, int n, double lambda) {
  for (int i = 1; i <= n; ++i) terms.push_back({-lambda, {{SiteIndex(i), PauliAxis::X}}});
}

PauliTerm zz(double c, SiteIndex a, SiteIndex b) { return {c, {{a, PauliAxis::Z}, {b, PauliAxis::Z}}}; }

}  // namespace

int num_sites(const ModelParams& model) {
  return std::visit(
      [](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, XYParams>) {
          return p.n_sites;
        } else {
          return p.rows * p.cols;
        }
      },
      model);
}

Hamiltonian build_xy_chain(const XYParams& params, const ResourceLimits& limits) {
  const int n = params.n_sites;
  if (n < 3) {
    throw InvalidArgument("periodic XY chain needs at least 3 sites (N=" + std::to_string(n) +
                          " would double-count a bond)");
  }
  check_sites(n, limits);
  if (!std::isfinite(params.gamma)) throw InvalidArgument("gamma must be finite");
  if (params.gamma < 0.0 || params.gamma > 1.0) {
    throw InvalidArgument("gamma must lie in [0, 1], got " + std::to_string(params.gamma));
  }
  check_lambda(params.lambda);

  const double czz = -(1.0 + params.gamma) / 2.0;
  const double cyy = -(1.0 - params.gamma) / 2.0;
  std::vector<PauliTerm> terms;
  terms.reserve(3 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const SiteIndex a(i);
    const SiteIndex b(i % n + 1);
    terms.push_back(zz(czz, a, b));
    terms.push_back({cyy, {{a, PauliAxis::Y}, {b, PauliAxis::Y}}});
  }
  append_field(terms, n, params.lambda);
  return Hamiltonian(n, std::move(terms));
}

Hamiltonian build_ising_grid(const GridParams& params, const ResourceLimits& limits) {
  if (params.rows < 2 || params.cols < 2) {
    throw InvalidArgument("grid needs at least 2 rows and 2 columns");
  }
  if (params.rows > limits.max_sites || params.cols > limits.max_sites) {
    throw CapExceeded("grid side exceeds the configured maximum of " + std::to_string(limits.max_sites) + " sites");
  }
  const int n = params.rows * params.cols;
  check_sites(n, limits);
  check_lambda(params.lambda);

  std::vector<PauliTerm> terms;
  for (int r = 1; r <= params.rows; ++r) {
    for (int c = 1; c <= params.cols; ++c) {
      const SiteIndex here = flatten({r, c}, params.cols);
      if (c < params.cols) terms.push_back(zz(-1.0, here, flatten({r, c + 1}, params.cols)));
      if (r < params.rows) terms.push_back(zz(-1.0, here, flatten({r + 1, c}, params.cols)));
    }
  }
  append_field(terms, n, params.lambda);
  return Hamiltonian(n, std::move(terms));
}

Hamiltonian build(const ModelParams& model, const ResourceLimits& limits) {
  return std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, XYParams>) {
          return build_xy_chain(p, limits);
        } else {
          return build_ising_grid(p, limits);
        }
      },
      model);
}

Hamiltonian transverse_driver(int n_sites) {
  std::vector<PauliTerm> terms;
  append_field(terms, n_sites, 1.0);
  return Hamiltonian(n_sites, std::move(terms));
}

DriverProblemSplit split_driver_problem(const ModelParams& model, const ResourceLimits& limits) {
  ModelParams without_field = model;
  std::visit([](auto& p) { p.lambda = 0.0; }, without_field);
  // Validate the caller's lambda too.
  (void)std::visit([](const auto& p) { check_lambda(p.lambda); return 0; }, model);
  Hamiltonian hp = build(without_field, limits);
  return {transverse_driver(hp.num_sites()), std::move(hp)};
}

}  // namespace aqcsim
