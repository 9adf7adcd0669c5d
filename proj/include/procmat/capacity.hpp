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
#include <vector>

#include "procmat/channel.hpp"
#include "procmat/process.hpp"

namespace procmat {

/// Eigenvalues below this absolute cutoff are treated as exact zeros in
/// entropy and rank computations.
inline constexpr double kSpectrumCutoff = 1e-12;

/// Von Neumann entropy in bits.
double von_neumann_entropy(const State& rho, double tol = kDefaultTol);

/// S(C(rho)) - S((C (x) id)(phi)) for a purification phi of rho whose
/// reference system has dimension rank(rho). In bits.
double coherent_information(const Channel& c, const State& rho);

/// Best coherent information found by the seeded multi-start search; a
/// certified lower bound on the maximum.
struct CapacityEstimate {
  double value = 0.0;
  State lower_witness;
  int restarts_used = 0;
  bool converged = false;
};

/// Derivative-free maximization of coherent information over input states,
/// parameterized by purification amplitudes. Deterministic for a fixed
/// seed; restarts use independent substreams and ties keep the earliest
/// start.
CapacityEstimate max_coherent_information(const Channel& c, int restarts = 32,
                                          double tol = 1e-8,
                                          std::uint64_t seed = 0);

/// Quantum capacity of the erasure channel: max{0, (2p-1) log2 d}.
double erasure_quantum_capacity(double p, Eigen::Index d);

/// Conditional probability matrix P(y|x) = Tr(povm_y C(input_x)); rows are
/// inputs. The effects must be PSD and sum to the identity on the output.
Eigen::MatrixXd induced_classical_channel(
    const Channel& c, const std::vector<State>& inputs,
    const std::vector<LabeledOperator>& povm, double tol = kDefaultTol);

/// Capacity of a discrete memoryless channel in bits, by alternating
/// maximization; stops when the capacity bracket is narrower than tol.
double blahut_arimoto(const Eigen::MatrixXd& p_yx, double tol = 1e-9,
                      int max_iter = 200000);

/// One agent-level use of n process copies: per-copy local channels wired
/// through copy-suffixed labels, a joint encoding on Alice's ancillas, a
/// fixed state on Bob's input ancillas, and a joint decoding on Bob's
/// output ancillas.
struct ProtocolSpec {
  int n = 1;
  CausalDecomposition dec;
  std::vector<Channel> alice_channels;  // copy i uses wires suffixed ".i"
  std::vector<Channel> bob_channels;
  Channel encode_alice;    // message wire -> Alice ancilla inputs
  State encode_bob;        // on Bob's ancilla inputs
  Channel decode_bob;      // Bob's ancilla outputs -> decoded wire
  State tau;               // shared reference (x) message state
  Eigen::Index m = 2;      // message dimension
  double epsilon = 0.0;
  Eigen::Index max_total_dim = 1 << 12;

  double rate() const;  // (1/n) log2 m
};

struct ProtocolResult {
  State rho_out;     // on {reference, decoded wire}
  double fidelity;   // against tau, smaller wire isometrically embedded
};

/// Contracts the full protocol network and evaluates the transmission
/// fidelity. When the decoded wire and the message wire differ in
/// dimension the smaller one is embedded isometrically before comparing.
ProtocolResult simulate_protocol(const ProtocolSpec& spec);

/// n = 1 identity code for a decomposition: Alice routes her ancilla into
/// A_O, Bob forwards B_I to his output ancilla, encoding and decoding are
/// identities and tau is maximally entangled on the A_O dimension.
ProtocolSpec identity_code_protocol(const CausalDecomposition& dec,
                                    double epsilon = 0.0);

/// Per-copy wire suffix (".1", ".2", ...).
std::string copy_suffix(int copy);

}  // namespace procmat
