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

#include "procmat/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace procmat {

namespace {

// Alice's channel in the reduction: inputs {A_I, ancilla}, output {A_O}
// plus possibly trivial extras. Returns the ancilla wire name.
std::string check_alice_channel(const Channel& alice, double tol) {
  const CptpReport report = is_cptp(alice, tol);
  if (!report.ok(tol)) {
    throw ValueError("Alice's channel is not CPTP (tp residual " +
                     std::to_string(report.tp_residual) + ")");
  }
  std::string ancilla;
  bool saw_in = false;
  for (const auto& n : alice.in_labels()) {
    if (n == kAliceIn) {
      saw_in = true;
    } else if (ancilla.empty()) {
      ancilla = n;
    } else {
      throw LabelError("Alice's channel must have a single ancilla wire");
    }
  }
  if (!saw_in || ancilla.empty()) {
    throw LabelError("Alice's channel must map {A_I, ancilla} to {A_O}");
  }
  bool saw_out = false;
  for (const auto& n : alice.out_labels()) {
    if (n == kAliceOut) {
      saw_out = true;
    } else if (alice.choi().label(n).dim != 1) {
      throw ValueError("Alice's extra output wire '" + n +
                       "' must be trivial");
    }
  }
  if (!saw_out) {
    throw LabelError("Alice's channel must output the process wire A_O");
  }
  return ancilla;
}

LabeledOperator drop_trivial_extras(const LabeledOperator& op,
                                    const std::vector<std::string>& keep) {
  std::vector<std::string> drop;
  for (const auto& l : op.labels()) {
    if (std::find(keep.begin(), keep.end(), l.name) == keep.end()) {
      drop.push_back(l.name);
    }
  }
  return drop.empty() ? op : partial_trace(op, drop);
}

}  // namespace

Channel contract_alice(const CausalDecomposition& dec, const Channel& alice,
                       double tol) {
  const std::string ancilla = check_alice_channel(alice, tol);
  const ProcessMatrix w = mixture(dec);
  const double d_bo = double(w.op.label(kBobOut).dim);
  LabeledOperator raw = link_product(w.op, alice.choi());
  raw = drop_trivial_extras(raw, {ancilla, kBobIn, kBobOut});
  return Channel(raw.scaled(1.0 / d_bo), {ancilla}, {kBobIn, kBobOut});
}

double bo_inert_residual(const Channel& n_eff) {
  return operator_distance(n_eff.choi(),
                           trace_replace(n_eff.choi(), {kBobOut}));
}

Channel discard_bob_output(const Channel& n_eff) {
  std::vector<std::string> outs;
  for (const auto& n : n_eff.out_labels()) {
    if (n != kBobOut) outs.push_back(n);
  }
  return Channel(partial_trace(n_eff.choi(), {kBobOut}), n_eff.in_labels(),
                 std::move(outs));
}

EffectiveDecomposition effective_decomposition(const CausalDecomposition& dec,
                                               const Channel& alice,
                                               double tol) {
  const std::string ancilla = check_alice_channel(alice, tol);
  const double d_bo = double(dec.w_ab.op.label(kBobOut).dim);
  const double d_ao = double(dec.w_ba.op.label(kAliceOut).dim);

  LabeledOperator l_raw = link_product(dec.w_ab.op, alice.choi());
  l_raw = drop_trivial_extras(l_raw, {ancilla, kBobIn, kBobOut});
  const Channel l_channel(partial_trace(l_raw, {kBobOut}).scaled(1.0 / d_bo),
                          {ancilla}, {kBobIn});

  const LabeledOperator sigma_op =
      partial_trace(dec.w_ba.op, {kAliceIn, kAliceOut, kBobOut})
          .scaled(1.0 / (d_ao * d_bo));
  EffectiveDecomposition ed{dec.p, l_channel, State{sigma_op}};

  const double residual =
      reconstruction_residual(ed, contract_alice(dec, alice, tol));
  if (residual > tol) {
    throw ValueError("effective decomposition does not reconstruct the "
                     "contracted process (residual " +
                     std::to_string(residual) + ")");
  }
  return ed;
}

double reconstruction_residual(const EffectiveDecomposition& ed,
                               const Channel& n_eff) {
  const Channel reduced = discard_bob_output(n_eff);
  const SystemLabel ancilla =
      ed.l_channel.choi().label(ed.l_channel.in_labels()[0]);
  // Choi of "discard ancilla, prepare sigma" is sigma (x) id_ancilla.
  const LabeledOperator prepare =
      tensor_product(ed.sigma.op, LabeledOperator::identity({ancilla}));
  const LabeledOperator reconstruction =
      ed.l_channel.choi().scaled(ed.p) + prepare.scaled(1.0 - ed.p);
  return operator_distance(reduced.choi(), reconstruction);
}

ErasureSimulation erasure_simulation(const EffectiveDecomposition& ed,
                                     Eigen::Index d, const Channel& n_eff) {
  if (d != ed.l_channel.in_dim()) {
    throw DimensionError("erasure dimension " + std::to_string(d) +
                         " does not match the ancilla wire");
  }
  const std::string ancilla = ed.l_channel.in_labels()[0];
  const SystemLabel flag_in{"#erased", d + 1};
  const SystemLabel b_in = ed.l_channel.choi().label(kBobIn);
  const Eigen::Index d_out = b_in.dim;

  // S(X) = L(P X P) + <e|X|e> sigma, with P the projector onto the first d
  // coordinates; assembled entry-wise on basis units of the flagged input.
  Eigen::MatrixXcd choi =
      Eigen::MatrixXcd::Zero(d_out * (d + 1), d_out * (d + 1));
  const SystemLabel anc_label = ed.l_channel.choi().label(ancilla);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(d, d);
      unit(i, j) = 1.0;
      const LabeledOperator mapped = apply_to_operator(
          ed.l_channel, LabeledOperator({anc_label}, std::move(unit)));
      for (Eigen::Index a = 0; a < d_out; ++a) {
        for (Eigen::Index c = 0; c < d_out; ++c) {
          choi(a * (d + 1) + i, c * (d + 1) + j) = mapped.matrix()(a, c);
        }
      }
    }
  }
  const LabeledOperator sigma = permute_to(ed.sigma.op, {b_in.name});
  for (Eigen::Index a = 0; a < d_out; ++a) {
    for (Eigen::Index c = 0; c < d_out; ++c) {
      choi(a * (d + 1) + d, c * (d + 1) + d) = sigma.matrix()(a, c);
    }
  }
  const Channel simulator(
      LabeledOperator({b_in, flag_in}, std::move(choi)), {flag_in.name},
      {b_in.name});

  const Channel erase = erasure_channel(ed.p, d, ancilla, flag_in.name);
  const Channel simulated = compose(simulator, erase);
  const double residual = operator_distance(
      simulated.choi(), discard_bob_output(n_eff).choi());
  return ErasureSimulation{simulator, residual};
}

CausalDecomposition example_process(double p, Eigen::Index d) {
  if (p < 0.0 || p > 1.0) {
    throw ValueError("probability " + std::to_string(p) + " outside [0, 1]");
  }
  if (d < 2) throw DimensionError("example process needs dimension >= 2");

  // Alice-first branch: route A_O isometrically onto the first d
  // coordinates of B_I.
  const State trivial_in = State{LabeledOperator::identity(
      {SystemLabel{kAliceIn, 1}, SystemLabel{"E", 1}})};
  Eigen::MatrixXcd embed = Eigen::MatrixXcd::Zero(d + 1, d);
  embed.topRows(d) = Eigen::MatrixXcd::Identity(d, d);
  const Channel embed_channel = choi_from_kraus(
      {embed}, {SystemLabel{"E", 1}, SystemLabel{kAliceOut, d}},
      {SystemLabel{kBobIn, d + 1}});
  const ProcessMatrix w_ab =
      comb_process(trivial_in, embed_channel, CausalOrder::AliceFirst, 1);

  // Bob-first branch: prepare the flag state on B_I; nothing flows back.
  const State flag = State{tensor_product(
      basis_state(SystemLabel{kBobIn, d + 1}, d).op,
      LabeledOperator::identity({SystemLabel{"E", 1}}))};
  const Channel trivial_channel =
      Channel(LabeledOperator::identity({SystemLabel{kAliceIn, 1},
                                         SystemLabel{"E", 1},
                                         SystemLabel{kBobOut, 1}}),
              {"E", kBobOut}, {kAliceIn});
  const ProcessMatrix w_ba =
      comb_process(flag, trivial_channel, CausalOrder::BobFirst, d);

  return CausalDecomposition{p, w_ab, w_ba};
}

CausalDecomposition swap_roles(const CausalDecomposition& dec) {
  const std::vector<std::pair<std::string, std::string>> swap = {
      {kAliceIn, kBobIn},
      {kBobIn, kAliceIn},
      {kAliceOut, kBobOut},
      {kBobOut, kAliceOut}};
  return CausalDecomposition{1.0 - dec.p, ProcessMatrix(dec.w_ba.op.renamed(swap)),
                             ProcessMatrix(dec.w_ab.op.renamed(swap))};
}

Channel routing_alice_channel(Eigen::Index d_a_in, Eigen::Index d_a_out,
                              const std::string& ancilla_name) {
  const LabeledOperator route =
      identity_channel(d_a_out, ancilla_name, kAliceOut).choi();
  const LabeledOperator discard =
      LabeledOperator::identity({SystemLabel{kAliceIn, d_a_in}});
  return Channel(tensor_product(route, discard), {kAliceIn, ancilla_name},
                 {kAliceOut});
}

double ReductionReport::max_residual() const {
  return std::max({bo_identity_residual, reconstruction_residual,
                   erasure_residual});
}

ReductionOutcome run_reduction(const CausalDecomposition& dec,
                               const Channel& alice, double tol) {
  const Channel n_eff = contract_alice(dec, alice, tol);
  // Residuals are diagnostics here; disable the reconstruction throw.
  const EffectiveDecomposition ed = effective_decomposition(
      dec, alice, std::numeric_limits<double>::infinity());
  const ErasureSimulation sim =
      erasure_simulation(ed, ed.l_channel.in_dim(), n_eff);

  ReductionReport report;
  report.p = dec.p;
  report.bo_identity_residual = bo_inert_residual(n_eff);
  report.reconstruction_residual = reconstruction_residual(ed, n_eff);
  report.erasure_residual = sim.residual;
  return ReductionOutcome{report, n_eff, discard_bob_output(n_eff), ed};
}

}  // namespace procmat
