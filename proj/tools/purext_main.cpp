// Copyright 2026 purext contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "purext/analysis.hpp"
#include "purext/config.hpp"
#include "purext/errors.hpp"
#include "purext/io.hpp"
#include "purext/model.hpp"
#include "purext/oracle.hpp"
#include "purext/parallel.hpp"
#include "purext/perturbation.hpp"
#include "purext/rng.hpp"
#include "purext/sweep.hpp"

namespace {

using namespace purext;

std::string strip_csv_ext(const std::string& path) {
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
    return path.substr(0, path.size() - 4);
  return path;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

ComplexVector initial_state(const std::string& name) {
  ComplexVector psi(4);
  if (name == "uu") psi[0] = 1.0;
  else if (name == "ud") psi[1] = 1.0;
  else if (name == "du") psi[2] = 1.0;
  else if (name == "dd") psi[3] = 1.0;
  else { // bell: (|ud> + |du>)/sqrt2
    psi[1] = 0.7071067811865475244;
    psi[2] = 0.7071067811865475244;
  }
  return psi;
}

double point_eps_tau_column(const RunConfig& cfg) {
  if (!cfg.raw_units) return cfg.eps_tau;
  return cfg.eps > 0.0 ? cfg.eps * cfg.tau : cfg.tau;
}

int run_point(const RunConfig& cfg) {
  const ComplexMatrix v = effective_operator(cfg.model_params(), cfg.ancilla(), cfg.point_tau());
  const SpectralData sd = spectral_decompose(v);
  const WitnessTriple w = witnesses(sd);
  write_point_csv(point_eps_tau_column(cfg), cfg.theta_over_pi, w, sd.defective,
                  cfg.metadata_lines(), cfg.out);
  std::printf("point: upsilon=%s lambda_eff=%s sigma=%s degenerate=%d defective=%d -> %s\n",
              fmt12(w.upsilon).c_str(), fmt12(w.lambda_eff).c_str(), fmt12(w.sigma).c_str(),
              w.degenerate_top ? 1 : 0, sd.defective ? 1 : 0, cfg.out.c_str());
  return 0;
}

void emit_grid(const SweepGrid& grid, const RunConfig& cfg) {
  const std::vector<std::string> meta = cfg.metadata_lines();
  if (cfg.format == OutputFormat::csv || cfg.format == OutputFormat::both)
    write_grid_csv(grid, meta, cfg.out);
  if (cfg.format == OutputFormat::ppm || cfg.format == OutputFormat::both) {
    const std::string base = strip_csv_ext(cfg.out);
    for (Quantity q : {Quantity::upsilon, Quantity::lambda_eff, Quantity::sigma})
      write_grid_ppm(grid, q, meta, base + "_" + quantity_name(q) + ".ppm");
  }
}

int run_sweep_cmd(const RunConfig& cfg) {
  const SweepGrid grid = run_sweep(cfg.grid_spec(), default_worker_count());
  emit_grid(grid, cfg);
  std::printf("sweep: %dx%d cells -> %s\n", grid.spec.eps_tau.count,
              grid.spec.theta_over_pi.count, cfg.out.c_str());
  return 0;
}

int run_diff(const RunConfig& cfg) {
  const int workers = default_worker_count();
  const SweepGrid grid = run_sweep(cfg.grid_spec(), workers);
  const SweepGrid baseline = cfg.baseline_csv.empty()
                                 ? run_sweep(cfg.baseline_grid_spec(), workers)
                                 : load_grid_csv(cfg.baseline_csv);
  const DiffMap dm = diff_map(grid, baseline);

  const std::vector<std::string> meta = cfg.metadata_lines();
  if (cfg.format == OutputFormat::csv || cfg.format == OutputFormat::both)
    write_diff_csv(grid, dm, meta, cfg.out);
  if (cfg.format == OutputFormat::ppm || cfg.format == OutputFormat::both) {
    const std::string base = strip_csv_ext(cfg.out);
    for (Quantity q : {Quantity::upsilon, Quantity::lambda_eff, Quantity::sigma})
      write_diff_ppm(dm, q, meta, base + "_diff_" + quantity_name(q) + ".ppm");
  }

  std::size_t nonwhite = 0;
  for (const DiffCell& c : dm.cells)
    if (c.c_upsilon != DiffClass::none || c.c_lambda != DiffClass::none ||
        c.c_sigma != DiffClass::none)
      ++nonwhite;
  std::printf("diff: %zu of %zu cells show a discrepancy >= %s -> %s\n", nonwhite,
              dm.cells.size(), fmt12(tol::diff_none).c_str(), cfg.out.c_str());
  return 0;
}

int run_perturb(const RunConfig& cfg) {
  ModelParams base = cfg.model_params();
  auto at_small = [&](double sp) {
    ModelParams p = base;
    if (cfg.regime == Regime::weak) {
      if (!(p.epsilon > 0.0)) throw InvalidRegime("perturb weak: requires epsilon > 0");
      p.eta = sp * p.epsilon;
    } else {
      const double eta_ref = cfg.raw_units ? p.eta : 1.0 / cfg.small_param;
      if (!(eta_ref > 0.0)) throw InvalidRegime("perturb strong: requires eta > 0");
      p.eta = eta_ref;
      p.epsilon = sp * eta_ref;
    }
    return p;
  };

  const double sp1 = cfg.small_param;
  const double sp2 = cfg.small_param / 10.0;
  const OrderReport r1 = verify_order(at_small(sp1), cfg.regime);
  const OrderReport r2 = verify_order(at_small(sp2), cfg.regime);
  const double ratio = r2.max_residual > 0.0 ? r1.max_residual / r2.max_residual : 0.0;

  std::ofstream out = open_csv(cfg.out);
  for (const std::string& line : cfg.metadata_lines()) out << "# " << line << '\n';
  out << "# max_residual_1=" << fmt12(r1.max_residual)
      << " max_residual_2=" << fmt12(r2.max_residual) << " residual_ratio=" << fmt12(ratio)
      << '\n';
  out << "regime,small_param,level,label,predicted,exact,residual,ambiguous\n";
  const char* regime = cfg.regime == Regime::weak ? "weak" : "strong";
  for (const OrderReport& r : {r1, r2}) {
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      const auto& lm = r.levels[k];
      out << regime << ',' << fmt12(r.small_param) << ',' << k << ',' << lm.label << ','
          << fmt12(lm.predicted) << ',' << fmt12(lm.exact) << ',' << fmt12(lm.residual)
          << ',' << (r.ambiguous ? 1 : 0) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + cfg.out);

  std::printf("perturb %s: residual %s at %s, %s at %s (ratio %s) -> %s\n", regime,
              fmt12(r1.max_residual).c_str(), fmt12(sp1).c_str(),
              fmt12(r2.max_residual).c_str(), fmt12(sp2).c_str(), fmt12(ratio).c_str(),
              cfg.out.c_str());
  return 0;
}

int run_oracle_check(const RunConfig& cfg) {
  std::ofstream out = open_csv(cfg.out);
  for (const std::string& line : cfg.metadata_lines()) out << "# " << line << '\n';
  out << "sample,omega_over_eps,eta_over_eps,phi_eta_over_pi,theta_over_pi,phi_x_over_pi,"
         "eps_tau,n,survival_effective,survival_full,rel_err,state_max_diff\n";

  const int n_list[4] = {1, 5, 20, 50};
  double worst_rel = 0.0, worst_state = 0.0;
  for (int k = 0; k < cfg.samples; ++k) {
    SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(k));
    const ModelParams p{4.0 * rng.uniform(), 1.0, 2.0 * rng.uniform(), 2.0 * rng.uniform()};
    const AncillaState a{0.02 + 0.96 * rng.uniform(), 2.0 * rng.uniform()};
    const double tau = 0.2 + 9.8 * rng.uniform();

    ComplexVector psi(4);
    double nrm = 0.0;
    while (nrm < 1e-6) {
      for (int i = 0; i < 4; ++i)
        psi[i] = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
      nrm = psi.norm();
    }
    psi = psi.normalized();
    const DensityMatrix rho0 = outer(psi, psi);

    const ComplexMatrix v = effective_operator(p, a, tau);
    for (int n : n_list) {
      const MeasurementRecord rec = run_protocol(p, a, tau, rho0, n);
      const DensityMatrix cond = evolve_conditional(v, rho0, n);
      const double sv = cond.trace().real();
      const double rel = std::abs(sv - rec.survival_probability) /
                         std::max(rec.survival_probability, 1e-300);
      const DensityMatrix norm_cond = cond * Complex(1.0 / sv);
      const double sd = max_abs_diff(norm_cond, rec.conditional_state);
      worst_rel = std::max(worst_rel, rel);
      worst_state = std::max(worst_state, sd);
      out << k << ',' << fmt12(p.omega) << ',' << fmt12(p.eta) << ','
          << fmt12(p.phi_eta_over_pi) << ',' << fmt12(a.theta_over_pi) << ','
          << fmt12(a.phi_x_over_pi) << ',' << fmt12(tau) << ',' << n << ','
          << fmt12(sv) << ',' << fmt12(rec.survival_probability) << ',' << fmt12(rel)
          << ',' << fmt12(sd) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + cfg.out);
  std::printf("oracle-check: %d samples, worst rel_err=%s, worst state diff=%s -> %s\n",
              cfg.samples, fmt12(worst_rel).c_str(), fmt12(worst_state).c_str(),
              cfg.out.c_str());
  return 0;
}

int run_trajectories(const RunConfig& cfg) {
  const ModelParams p = cfg.model_params();
  const AncillaState a = cfg.ancilla();
  const double tau = cfg.point_tau();
  const ComplexVector psi0 = initial_state(cfg.psi0);

  const TrajectorySummary ts = sample_trajectories(p, a, tau, psi0, cfg.steps, cfg.trials,
                                                   cfg.seed, default_worker_count());
  const MeasurementRecord rec = run_protocol(p, a, tau, outer(psi0, psi0), cfg.steps);

  std::ofstream out = open_csv(cfg.out);
  for (const std::string& line : cfg.metadata_lines()) out << "# " << line << '\n';
  out << "steps,trials,seed,survived,frequency,exact_survival,abs_error,mean_top_overlap\n";
  out << cfg.steps << ',' << cfg.trials << ',' << cfg.seed << ',' << ts.survived << ','
      << fmt12(ts.survival_frequency) << ',' << fmt12(rec.survival_probability) << ','
      << fmt12(std::abs(ts.survival_frequency - rec.survival_probability)) << ','
      << fmt12(ts.mean_top_overlap) << '\n';
  if (!out) throw IoError("write failed: " + cfg.out);

  std::printf("trajectories: %lld/%lld survived (freq %s, exact %s) -> %s\n",
              static_cast<long long>(ts.survived), static_cast<long long>(ts.trials),
              fmt12(ts.survival_frequency).c_str(), fmt12(rec.survival_probability).c_str(),
              cfg.out.c_str());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    const RunConfig cfg = parse_config(argc, argv);
    switch (cfg.command) {
      case Command::point: return run_point(cfg);
      case Command::sweep: return run_sweep_cmd(cfg);
      case Command::diff: return run_diff(cfg);
      case Command::perturb: return run_perturb(cfg);
      case Command::oracle_check: return run_oracle_check(cfg);
      case Command::trajectories: return run_trajectories(cfg);
    }
  } catch (const purext::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
