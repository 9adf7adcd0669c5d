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

#include "procmat/channel.hpp"
#include "procmat/process.hpp"

namespace procmat {

/// Effective form of a causally separable process after Alice's local
/// channel: with probability p the channel L carries Alice's ancilla to
/// Bob's input, otherwise Bob receives the fixed state sigma and Alice's
/// ancilla is discarded. L is CPTP and sigma has unit trace.
struct EffectiveDecomposition {
  double p = 1.0;
  Channel l_channel;  // ancilla -> B_I
  State sigma;        // on B_I
};

/// Contracts the mixture of `dec` with Alice's channel. Alice's channel
/// must map {A_I, ancilla} to {A_O} (any further output wires must be
/// trivial). The resulting channel maps the ancilla to {B_I, B_O}; its
/// Choi operator is the raw contraction divided by d_{B_O}, which makes it
/// CPTP because the B_O factor of the contraction is proportional to the
/// identity (see bo_inert_residual).
Channel contract_alice(const CausalDecomposition& dec, const Channel& alice,
                       double tol = kDefaultTol);

/// How far the B_O factor of the contracted channel is from exact
/// identity-proportional form: || choi - trace_replace(choi, {B_O}) ||.
double bo_inert_residual(const Channel& n_eff);

/// Extracts (p, L, sigma) from the decomposition and Alice's channel.
///
/// Normalization: L's Choi is Tr_{B_O}(w_ab * alice) / d_{B_O} and sigma is
/// Tr_{A_I A_O B_O}(w_ba) / (d_{A_O} d_{B_O}); the divisors are forced by
/// the trace bookkeeping of the reduced-process conditions and make L CPTP
/// and sigma unit trace. Throws ValueError when the reconstruction
/// p L + (1-p)(discard (x) prepare sigma) misses the contracted channel by
/// more than tol.
EffectiveDecomposition effective_decomposition(const CausalDecomposition& dec,
                                               const Channel& alice,
                                               double tol = kDefaultTol);

/// Spectral-norm distance between the reconstruction from (p, L, sigma) and
/// the contracted channel with B_O discarded.
double reconstruction_residual(const EffectiveDecomposition& ed,
                               const Channel& n_eff);

/// Channel with the inert B_O output traced out.
Channel discard_bob_output(const Channel& n_eff);

struct ErasureSimulation {
  Channel simulator;  // (d+1)-dimensional input -> B_I
  double residual;    // || simulator after erasure - contracted channel ||
};

/// Bob's simulation channel: on the no-erasure subspace apply L, on the
/// erasure flag prepare sigma. Composing it after erasure_channel(p, d)
/// must reproduce `n_eff` with B_O discarded; `residual` measures that.
/// `d` is the dimension of Alice's ancilla wire.
ErasureSimulation erasure_simulation(const EffectiveDecomposition& ed,
                                     Eigen::Index d, const Channel& n_eff);

/// Canonical causally separable family on wire dimensions
/// (A_I, A_O, B_I, B_O) = (1, d, d+1, 1): with weight p the process routes
/// A_O isometrically onto the first d coordinates of B_I, otherwise it
/// prepares the orthogonal flag state on B_I. After Alice routes her
/// ancilla into A_O this is exactly an erasure channel with keep
/// probability p.
CausalDecomposition example_process(double p, Eigen::Index d);

/// Relabels A <-> B wires and swaps the two branches, so the reduction
/// pipeline runs in the Bob-to-Alice direction; the branch weight becomes
/// 1 - p.
CausalDecomposition swap_roles(const CausalDecomposition& dec);

/// Alice's routing channel: discards A_I and forwards the ancilla into A_O.
Channel routing_alice_channel(Eigen::Index d_a_in, Eigen::Index d_a_out,
                              const std::string& ancilla_name = "A_I'");

/// Residual summary of one reduction pipeline run.
struct ReductionReport {
  double p = 0.0;
  double bo_identity_residual = 0.0;
  double reconstruction_residual = 0.0;
  double erasure_residual = 0.0;

  double max_residual() const;
};

struct ReductionOutcome {
  ReductionReport report;
  Channel n_eff;    // ancilla -> {B_I, B_O}
  Channel reduced;  // ancilla -> B_I (B_O discarded)
  EffectiveDecomposition effective;
};

/// Full pipeline: contract, decompose, simulate. Never throws on large
/// residuals; they are reported for the caller to judge.
ReductionOutcome run_reduction(const CausalDecomposition& dec,
                               const Channel& alice, double tol = kDefaultTol);

}  // namespace procmat
