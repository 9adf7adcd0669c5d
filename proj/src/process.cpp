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

#include "procmat/process.hpp"

#include <algorithm>
#include <cmath>

#include "procmat/random.hpp"

namespace procmat {

namespace {

const std::vector<std::string> kCanonicalOrder = {kAliceIn, kAliceOut, kBobIn,
                                                  kBobOut};

double min_eigenvalue(const LabeledOperator& op) {
  const Eigen::MatrixXcd h = 0.5 * (op.matrix() + op.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

void require_cptp(const Channel& c, double tol, const std::string& what) {
  const CptpReport report = is_cptp(c, tol);
  if (!report.ok(tol)) {
    throw ValueError(what + " is not CPTP (psd=" +
                     (report.psd ? "true" : "false") + ", tp residual " +
                     std::to_string(report.tp_residual) + ")");
  }
}

}  // namespace

ProcessMatrix::ProcessMatrix(LabeledOperator operator_in)
    : op(permute_to(operator_in, kCanonicalOrder)) {}

ProcessDims ProcessMatrix::dims() const {
  return ProcessDims{op.label(kAliceIn).dim, op.label(kAliceOut).dim,
                     op.label(kBobIn).dim, op.label(kBobOut).dim};
}

Eigen::Index ProcessMatrix::output_dim() const {
  return op.label(kAliceOut).dim * op.label(kBobOut).dim;
}

double ProcessValidityReport::max_residual() const {
  return std::max({psd_deficit, trace_residual, alice_marginal_residual,
                   bob_marginal_residual, loop_residual});
}

ProcessValidityReport validate_process(const ProcessMatrix& w, double tol) {
  ProcessValidityReport report;
  const LabeledOperator& op = w.op;

  const double herm = spectral_norm(op.matrix() - op.matrix().adjoint());
  if (herm > tol * std::max(1.0, spectral_norm(op.matrix()))) {
    throw NonHermitianError("process matrix is not Hermitian");
  }
  report.psd_deficit = std::max(0.0, -min_eigenvalue(op));
  report.trace_residual =
      std::abs(op.trace() - std::complex<double>(double(w.output_dim())));

  // Discarding Bob must leave Alice's reduced process with a maximally
  // mixed output, and symmetrically for Bob.
  const LabeledOperator alice_side = trace_replace(op, {kBobIn, kBobOut});
  report.alice_marginal_residual =
      operator_distance(alice_side, trace_replace(alice_side, {kAliceOut}));
  const LabeledOperator bob_side = trace_replace(op, {kAliceIn, kAliceOut});
  report.bob_marginal_residual =
      operator_distance(bob_side, trace_replace(bob_side, {kBobOut}));

  const LabeledOperator loop_part = trace_replace(op, {kAliceOut}) +
                                    trace_replace(op, {kBobOut}) -
                                    trace_replace(op, {kAliceOut, kBobOut});
  report.loop_residual = operator_distance(op, loop_part);
  return report;
}

double check_causal_order(const ProcessMatrix& w, CausalOrder order) {
  const std::string replaced =
      order == CausalOrder::AliceFirst ? kBobOut : kAliceOut;
  return operator_distance(w.op, trace_replace(w.op, {replaced}));
}

ProcessMatrix from_channel(const Channel& c, double tol) {
  require_cptp(c, tol, "channel");
  if (c.in_labels().size() != 1 || c.out_labels().size() != 1) {
    throw LabelError("from_channel expects a single-wire channel");
  }
  const LabeledOperator relabeled = c.choi().renamed(
      {{c.in_labels()[0], kAliceOut}, {c.out_labels()[0], kBobIn}});
  const LabeledOperator trivial = LabeledOperator::identity(
      {SystemLabel{kAliceIn, 1}, SystemLabel{kBobOut, 1}});
  return ProcessMatrix(tensor_product(relabeled, trivial));
}

ProcessMatrix comb_process(const State& rho, const Channel& c,
                           CausalOrder direction,
                           Eigen::Index other_output_dim) {
  const bool alice_first = direction == CausalOrder::AliceFirst;
  const std::string first_in = alice_first ? kAliceIn : kBobIn;
  const std::string first_out = alice_first ? kAliceOut : kBobOut;
  const std::string second_in = alice_first ? kBobIn : kAliceIn;
  const std::string second_out = alice_first ? kBobOut : kAliceOut;

  if (rho.op.labels().size() != 2 || !rho.op.has_label(first_in)) {
    throw LabelError("comb state must live on {" + first_in + ", memory}");
  }
  std::string memory;
  for (const auto& l : rho.op.labels()) {
    if (l.name != first_in) memory = l.name;
  }
  const std::vector<std::string> expected_in = {memory, first_out};
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(c.in_labels()) != sorted(expected_in) ||
      c.out_labels() != std::vector<std::string>{second_in}) {
    throw LabelError("comb channel must map {" + memory + ", " + first_out +
                     "} to {" + second_in + "}");
  }
  if (c.choi().label(memory).dim != rho.op.label(memory).dim) {
    throw DimensionError("memory wire '" + memory +
                         "' has mismatched dimensions");
  }

  const LabeledOperator body = link_product(rho.op, c.choi());
  const LabeledOperator free_out =
      LabeledOperator::identity({SystemLabel{second_out, other_output_dim}});
  return ProcessMatrix(tensor_product(body, free_out));
}

ProcessMatrix mix(double p, const ProcessMatrix& w1, const ProcessMatrix& w2) {
  if (p < 0.0 || p > 1.0) {
    throw ValueError("mixing weight " + std::to_string(p) + " outside [0, 1]");
  }
  return ProcessMatrix(w1.op.scaled(p) + w2.op.scaled(1.0 - p));
}

ProcessMatrix mixture(const CausalDecomposition& dec) {
  return mix(dec.p, dec.w_ab, dec.w_ba);
}

Channel insert_parties(const ProcessMatrix& w, const Channel& alice,
                       const Channel& bob, double tol) {
  require_cptp(alice, tol, "Alice's channel");
  require_cptp(bob, tol, "Bob's channel");
  auto wires_of = [](const Channel& c, const std::string& in_wire,
                     const std::string& out_wire, std::vector<std::string>& ins,
                     std::vector<std::string>& outs) {
    bool saw_in = false, saw_out = false;
    for (const auto& n : c.in_labels()) {
      if (n == in_wire) {
        saw_in = true;
      } else {
        ins.push_back(n);
      }
    }
    for (const auto& n : c.out_labels()) {
      if (n == out_wire) {
        saw_out = true;
      } else {
        outs.push_back(n);
      }
    }
    if (!saw_in || !saw_out) {
      throw LabelError("party channel must use the process wires '" + in_wire +
                       "' and '" + out_wire + "'");
    }
  };
  std::vector<std::string> ins, outs;
  wires_of(alice, kAliceIn, kAliceOut, ins, outs);
  wires_of(bob, kBobIn, kBobOut, ins, outs);

  const LabeledOperator parties =
      tensor_product(alice.choi(), bob.choi());  // rejects label collisions
  return Channel(link_product(w.op, parties), std::move(ins), std::move(outs));
}

ProcessMatrix random_ordered_process(const ProcessDims& dims,
                                     Eigen::Index memory_dim,
                                     std::uint64_t seed,
                                     CausalOrder direction) {
  Rng rng = make_rng(seed);
  const bool alice_first = direction == CausalOrder::AliceFirst;
  const std::string first_in = alice_first ? kAliceIn : kBobIn;
  const std::string first_out = alice_first ? kAliceOut : kBobOut;
  const std::string second_in = alice_first ? kBobIn : kAliceIn;
  const Eigen::Index d_first_in = alice_first ? dims.a_in : dims.b_in;
  const Eigen::Index d_first_out = alice_first ? dims.a_out : dims.b_out;
  const Eigen::Index d_second_in = alice_first ? dims.b_in : dims.a_in;
  const Eigen::Index d_other_out = alice_first ? dims.b_out : dims.a_out;

  const State rho = random_state(
      {SystemLabel{first_in, d_first_in}, SystemLabel{"E", memory_dim}}, rng);
  const Channel c = random_cptp_channel(
      {SystemLabel{"E", memory_dim}, SystemLabel{first_out, d_first_out}},
      {SystemLabel{second_in, d_second_in}}, rng);
  return comb_process(rho, c, direction, d_other_out);
}

}  // namespace procmat
