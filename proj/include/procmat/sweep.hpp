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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "procmat/capacity.hpp"
#include "procmat/reduction.hpp"

namespace procmat {

enum class SweepDirection { AB, BA, Both };

/// Capacity sweep over the canonical erasure-like family: one row per grid
/// probability, reducing the process with the routing channel and
/// estimating capacities in the requested directions.
struct SweepConfig {
  Eigen::Index dim = 2;
  std::vector<double> p_grid;
  int restarts = 32;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  SweepDirection direction = SweepDirection::Both;
  /// Run on the role-swapped family instead (reduction then goes B -> A).
  bool swap_process_roles = false;
};

/// One sweep row. Direction columns that were not requested hold NaN.
struct SweepRow {
  double p = 0.0;
  double q_cap_analytic = 0.0;
  double q_cap_numeric_ab = 0.0;
  double q_cap_numeric_ba = 0.0;
  double classical_cap = 0.0;
  double erasure_residual = 0.0;
  int restarts = 0;
  std::uint64_t seed = 0;
};

std::vector<SweepRow> run_theorem_sweep(const SweepConfig& config);

/// CSV with the fixed header
/// p,q_cap_analytic,q_cap_numeric_ab,q_cap_numeric_ba,classical_cap,
/// erasure_residual,restarts,seed and 12-significant-digit values.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Parses "a:b:step" into an inclusive grid.
std::vector<double> parse_p_grid(const std::string& grid_spec);

/// Fixed formatting used in CSV output (12 significant digits).
std::string format_significant(double value);

/// Max coherent information of the process reduced in one direction, plus
/// the residual summary of the reduction. Used per sweep cell.
struct DirectionEstimate {
  double capacity = 0.0;
  ReductionReport report;
  Channel reduced;
};

DirectionEstimate estimate_direction(const CausalDecomposition& dec,
                                     int restarts, double tol,
                                     std::uint64_t seed);

/// Classical capacity of a reduced channel probed with computational-basis
/// inputs and the computational-basis POVM on the output.
double classical_capacity_of_reduced(const Channel& reduced, double tol);

}  // namespace procmat
