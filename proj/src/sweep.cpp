// Copyright 2026 The procmat developers
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

#include "procmat/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "procmat/random.hpp"

namespace procmat {

std::string format_significant(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::vector<double> parse_p_grid(const std::string& grid_spec) {
  double a = 0.0, b = 0.0, step = 0.0;
  char trailing = '\0';
  const int matched = std::sscanf(grid_spec.c_str(), "%lf:%lf:%lf%c", &a, &b,
                                  &step, &trailing);
  if (matched != 3) {
    throw ValueError("grid '" + grid_spec + "' is not of the form a:b:step");
  }
  if (step <= 0.0 || b < a) {
    throw ValueError("grid '" + grid_spec + "' must ascend with step > 0");
  }
  if (a < 0.0 || b > 1.0) {
    throw ValueError("grid probabilities must stay within [0, 1]");
  }
  std::vector<double> grid;
  const int count = int(std::floor((b - a) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) grid.push_back(std::min(a + i * step, 1.0));
  return grid;
}

DirectionEstimate estimate_direction(const CausalDecomposition& dec,
                                     int restarts, double tol,
                                     std::uint64_t seed) {
  const ProcessDims dims = dec.w_ab.dims();
  const Channel alice = routing_alice_channel(dims.a_in, dims.a_out);
  ReductionOutcome outcome = run_reduction(dec, alice, tol);
  const CapacityEstimate estimate =
      max_coherent_information(outcome.reduced, restarts, 1e-8, seed);
  return DirectionEstimate{estimate.value, outcome.report,
                           std::move(outcome.reduced)};
}

double classical_capacity_of_reduced(const Channel& reduced, double tol) {
  const SystemLabel in = reduced.choi().label(reduced.in_labels()[0]);
  std::vector<State> inputs;
  for (Eigen::Index k = 0; k < in.dim; ++k) {
    inputs.push_back(basis_state(in, k));
  }
  std::vector<LabeledOperator> povm;
  const std::vector<SystemLabel> out = reduced.out_system_labels();
  Eigen::Index d_out = 1;
  for (const auto& l : out) d_out *= l.dim;
  for (Eigen::Index y = 0; y < d_out; ++y) {
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d_out, d_out);
    proj(y, y) = 1.0;
    povm.emplace_back(out, std::move(proj));
  }
  const Eigen::MatrixXd p_yx =
      induced_classical_channel(reduced, inputs, povm, tol);
  return blahut_arimoto(p_yx, 1e-12);
}

std::vector<SweepRow> run_theorem_sweep(const SweepConfig& config) {
  if (config.p_grid.empty()) {
    throw ValueError("sweep needs a non-empty probability grid");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<SweepRow> rows;
  rows.reserve(config.p_grid.size());

  for (std::size_t i = 0; i < config.p_grid.size(); ++i) {
    const double p = config.p_grid[i];
    CausalDecomposition dec = example_process(p, config.dim);
    if (config.swap_process_roles) dec = swap_roles(dec);

    SweepRow row;
    row.p = p;
    row.q_cap_analytic = erasure_quantum_capacity(p, config.dim);
    row.q_cap_numeric_ab = nan;
    row.q_cap_numeric_ba = nan;
    row.classical_cap = nan;
    row.erasure_residual = nan;
    row.restarts = config.restarts;
    row.seed = config.seed;

    if (config.direction != SweepDirection::BA) {
      const DirectionEstimate ab = estimate_direction(
          dec, config.restarts, config.tol, derive_seed(config.seed, 2 * i));
      row.q_cap_numeric_ab = ab.capacity;
      row.erasure_residual = ab.report.erasure_residual;
      row.classical_cap = classical_capacity_of_reduced(ab.reduced, config.tol);
    }
    if (config.direction != SweepDirection::AB) {
      const DirectionEstimate ba =
          estimate_direction(swap_roles(dec), config.restarts, config.tol,
                             derive_seed(config.seed, 2 * i + 1));
      row.q_cap_numeric_ba = ba.capacity;
      if (config.direction == SweepDirection::BA) {
        row.erasure_residual = ba.report.erasure_residual;
        row.classical_cap =
            classical_capacity_of_reduced(ba.reduced, config.tol);
      }
    }
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "p,q_cap_analytic,q_cap_numeric_ab,q_cap_numeric_ba,classical_cap,"
         "erasure_residual,restarts,seed\n";
  for (const auto& row : rows) {
    out << format_significant(row.p) << ','
        << format_significant(row.q_cap_analytic) << ','
        << format_significant(row.q_cap_numeric_ab) << ','
        << format_significant(row.q_cap_numeric_ba) << ','
        << format_significant(row.classical_cap) << ','
        << format_significant(row.erasure_residual) << ',' << row.restarts
        << ',' << row.seed << '\n';
  }
}

}  // namespace procmat
