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
#include <string>
#include <vector>

#include "procmat/channel.hpp"
#include "procmat/labeled_operator.hpp"

namespace procmat {

inline constexpr const char* kAliceIn = "A_I";
inline constexpr const char* kAliceOut = "A_O";
inline constexpr const char* kBobIn = "B_I";
inline constexpr const char* kBobOut = "B_O";

/// Wire dimensions of a bipartite process; trivial wires carry dimension 1
/// explicitly.
struct ProcessDims {
  Eigen::Index a_in = 1;
  Eigen::Index a_out = 1;
  Eigen::Index b_in = 1;
  Eigen::Index b_out = 1;
};

/// Bipartite process matrix on the wires {A_I, A_O, B_I, B_O}, kept in that
/// canonical label order. Construction checks the label set only; validity
/// is checked by validate_process.
struct ProcessMatrix {
  LabeledOperator op;

  explicit ProcessMatrix(LabeledOperator operator_in);

  ProcessDims dims() const;
  /// Product of the output-wire dimensions.
  Eigen::Index output_dim() const;
};

/// Residuals of the five process-matrix conditions, in the spectral norm:
/// positivity deficit, trace, the two reduced-process conditions (the
/// marginal left after discarding the other party must have a maximally
/// mixed output wire), and the loop condition forbidding mutual signaling
/// terms.
struct ProcessValidityReport {
  double psd_deficit = 0.0;
  double trace_residual = 0.0;
  double alice_marginal_residual = 0.0;
  double bob_marginal_residual = 0.0;
  double loop_residual = 0.0;

  double max_residual() const;
  bool passed(double tol = kDefaultTol) const { return max_residual() <= tol; }
};

enum class CausalOrder {
  AliceFirst,  // no signaling from Bob to Alice
  BobFirst,    // no signaling from Alice to Bob
};

ProcessValidityReport validate_process(const ProcessMatrix& w,
                                       double tol = kDefaultTol);

/// Distance of w from the no-signaling subspace of the given order:
/// || w - trace_replace(w, B_O) || for AliceFirst, mirrored for BobFirst.
double check_causal_order(const ProcessMatrix& w, CausalOrder order);

/// Embeds a channel from Alice to Bob as a process with trivial A_I and B_O.
ProcessMatrix from_channel(const Channel& c, double tol = kDefaultTol);

/// Causally ordered process built from a memory comb. For AliceFirst, `rho`
/// is a state on {A_I, E} and `c` a channel {E, A_O} -> {B_I}; the free
/// output wire B_O carries `other_output_dim`. BobFirst mirrors the roles.
ProcessMatrix comb_process(const State& rho, const Channel& c,
                           CausalOrder direction,
                           Eigen::Index other_output_dim);

ProcessMatrix mix(double p, const ProcessMatrix& w1, const ProcessMatrix& w2);

/// Convex mixture of two fixed-order processes: w_ab is causally ordered
/// with Alice first and carries weight p.
struct CausalDecomposition {
  double p = 1.0;
  ProcessMatrix w_ab;
  ProcessMatrix w_ba;
};

ProcessMatrix mixture(const CausalDecomposition& dec);

/// Contracts the process with both parties' local channels, producing the
/// shared channel between the ancilla wires. The party channels must use
/// the process wire names (A_I, A_O / B_I, B_O); every other label is an
/// ancilla wire of the resulting channel.
Channel insert_parties(const ProcessMatrix& w, const Channel& alice,
                       const Channel& bob, double tol = kDefaultTol);

/// Deterministic random causally ordered process: a memory comb over a
/// random density operator and a random Kraus channel.
ProcessMatrix random_ordered_process(const ProcessDims& dims,
                                     Eigen::Index memory_dim,
                                     std::uint64_t seed, CausalOrder direction);

}  // namespace procmat
