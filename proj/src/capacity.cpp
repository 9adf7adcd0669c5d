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

#include "procmat/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "procmat/random.hpp"
#include "procmat/reduction.hpp"

namespace procmat {

namespace {

double entropy_bits(const Eigen::MatrixXcd& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (op + op.adjoint()), Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    if (lambda > kSpectrumCutoff) h -= lambda * std::log2(lambda);
  }
  return h;
}

std::string fresh_reference_name(const Channel& c) {
  std::string name = "#ref";
  while (c.choi().has_label(name)) name += "'";
  return name;
}

// Rank-1 truncation of the purification amplitudes; keeps the dominant
// singular direction. Candidate for the pure-state boundary of the search.
Eigen::MatrixXcd rank_one_truncation(const Eigen::MatrixXcd& g) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(
      g, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.singularValues()(0) * svd.matrixU().col(0) *
         svd.matrixV().col(0).adjoint();
}

}  // namespace

double von_neumann_entropy(const State& rho, double tol) {
  if (!is_psd(rho.op, tol)) {
    throw ValueError("entropy requires a positive semidefinite state");
  }
  if (std::abs(rho.op.trace() - std::complex<double>(1.0)) > tol) {
    throw ValueError("entropy requires a unit-trace state");
  }
  return entropy_bits(rho.op.matrix());
}

double coherent_information(const Channel& c, const State& rho) {
  const LabeledOperator rho_op = permute_to(rho.op, c.in_labels());
  const Eigen::Index d_in = rho_op.dim();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (rho_op.matrix() + rho_op.matrix().adjoint()));
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < d_in; ++k) {
    if (solver.eigenvalues()(k) > kSpectrumCutoff) ++rank;
  }
  rank = std::max<Eigen::Index>(rank, 1);

  // Purification with a reference of dimension rank(rho).
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d_in * rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    const Eigen::Index src = d_in - 1 - k;  // largest eigenvalues
    const double lambda = std::max(0.0, solver.eigenvalues()(src));
    const Eigen::VectorXcd v = solver.eigenvectors().col(src);
    for (Eigen::Index i = 0; i < d_in; ++i) {
      phi(i * rank + k) = std::sqrt(lambda) * v(i);
    }
  }
  std::vector<SystemLabel> phi_labels = c.in_system_labels();
  phi_labels.push_back(SystemLabel{fresh_reference_name(c), rank});
  const LabeledOperator phi_op(std::move(phi_labels), phi * phi.adjoint());

  const LabeledOperator out = apply_to_operator(c, rho_op);
  const LabeledOperator joint = link_product(phi_op, c.choi());
  return entropy_bits(out.matrix()) - entropy_bits(joint.matrix());
}

CapacityEstimate max_coherent_information(const Channel& c, int restarts,
                                          double tol, std::uint64_t seed) {
  if (restarts < 1) throw ValueError("restarts must be >= 1");
  const std::vector<SystemLabel> in_labels = c.in_system_labels();
  const Eigen::Index d = c.in_dim();

  auto state_of = [&](const Eigen::MatrixXcd& g) {
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    return State{LabeledOperator(in_labels, std::move(rho))};
  };
  auto eval = [&](const Eigen::MatrixXcd& g) {
    return coherent_information(c, state_of(g));
  };

  const int proposals_per_sweep = std::max<int>(16, 8 * int(d) * int(d));
  const double step_floor = 1e-6;
  const long eval_budget = 300000;

  double best = -std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd best_g;
  bool best_converged = false;

  for (int start = 0; start < restarts; ++start) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(start) + 1);
    Eigen::MatrixXcd g = gaussian_complex_matrix(d, d, rng);
    double val = eval(g);
    long evals = 1;
    double step = 0.25;
    while (step > step_floor && evals < eval_budget) {
      double sweep_gain = 0.0;
      for (int t = 0; t < proposals_per_sweep && evals < eval_budget; ++t) {
        Eigen::MatrixXcd cand = g + step * gaussian_complex_matrix(d, d, rng);
        const double v = eval(cand);
        ++evals;
        if (v > val) {
          sweep_gain += v - val;
          val = v;
          g = std::move(cand);
        }
      }
      {
        // Boundary candidate: the pure state nearest to the current point.
        Eigen::MatrixXcd cand = rank_one_truncation(g);
        const double v = eval(cand);
        ++evals;
        if (v > val) {
          sweep_gain += v - val;
          val = v;
          g = std::move(cand);
        }
      }
      if (sweep_gain < tol) step *= 0.5;
    }
    const bool converged = step <= step_floor;
    if (val > best) {
      best = val;
      best_g = g;
      best_converged = converged;
    }
  }
  return CapacityEstimate{best, state_of(best_g), restarts, best_converged};
}

double erasure_quantum_capacity(double p, Eigen::Index d) {
  if (p < 0.0 || p > 1.0) {
    throw ValueError("erasure probability outside [0, 1]");
  }
  if (d < 1) throw DimensionError("dimension must be positive");
  return std::max(0.0, (2.0 * p - 1.0) * std::log2(double(d)));
}

Eigen::MatrixXd induced_classical_channel(
    const Channel& c, const std::vector<State>& inputs,
    const std::vector<LabeledOperator>& povm, double tol) {
  if (inputs.empty() || povm.empty()) {
    throw ValueError("need at least one input state and one POVM effect");
  }
  LabeledOperator sum = povm[0];
  for (std::size_t y = 1; y < povm.size(); ++y) sum = sum + povm[y];
  const LabeledOperator id_out =
      LabeledOperator::identity(c.out_system_labels());
  if (operator_distance(sum, id_out) > tol) {
    throw ValueError("POVM effects do not sum to the identity");
  }
  for (const auto& effect : povm) {
    if (!is_psd(effect, tol)) {
      throw ValueError("POVM effect is not positive semidefinite");
    }
  }

  Eigen::MatrixXd p_yx(inputs.size(), povm.size());
  for (std::size_t x = 0; x < inputs.size(); ++x) {
    const LabeledOperator out = apply_to_operator(c, inputs[x].op);
    for (std::size_t y = 0; y < povm.size(); ++y) {
      const LabeledOperator eff = permute_to(povm[y], out.label_names());
      const std::complex<double> tr =
          eff.matrix().cwiseProduct(out.matrix().transpose()).sum();
      p_yx(Eigen::Index(x), Eigen::Index(y)) = std::max(0.0, tr.real());
    }
    const double row_sum = p_yx.row(Eigen::Index(x)).sum();
    if (std::abs(row_sum - 1.0) > std::max(tol, 1e-9)) {
      throw ValueError("induced row does not sum to one (channel not TP?)");
    }
    p_yx.row(Eigen::Index(x)) /= row_sum;
  }
  return p_yx;
}

double blahut_arimoto(const Eigen::MatrixXd& p_yx, double tol, int max_iter) {
  const Eigen::Index m = p_yx.rows();
  const Eigen::Index n = p_yx.cols();
  if (m < 1 || n < 1) throw ValueError("empty channel matrix");
  Eigen::MatrixXd p = p_yx;
  for (Eigen::Index x = 0; x < m; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      if (p(x, y) < -1e-12) throw ValueError("negative channel probability");
      p(x, y) = std::max(0.0, p(x, y));
    }
    const double row_sum = p.row(x).sum();
    if (std::abs(row_sum - 1.0) > 1e-9) {
      throw ValueError("channel matrix row " + std::to_string(x) +
                       " sums to " + std::to_string(row_sum));
    }
    p.row(x) /= row_sum;
  }

  const double ln2 = std::log(2.0);
  Eigen::VectorXd q = Eigen::VectorXd::Constant(m, 1.0 / double(m));
  Eigen::VectorXd divergence(m);
  double lower = 0.0, upper = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Eigen::VectorXd r = p.transpose() * q;
    for (Eigen::Index x = 0; x < m; ++x) {
      double d = 0.0;
      for (Eigen::Index y = 0; y < n; ++y) {
        if (p(x, y) > 0.0) d += p(x, y) * std::log(p(x, y) / r(y));
      }
      divergence(x) = d;
    }
    lower = q.dot(divergence);
    upper = divergence.maxCoeff();
    if (upper - lower < tol * ln2) break;
    q = q.cwiseProduct((divergence.array() - upper).exp().matrix());
    q /= q.sum();
  }
  return std::max(0.0, 0.5 * (lower + upper) / ln2);
}

double ProtocolSpec::rate() const {
  return std::log2(double(m)) / double(n);
}

std::string copy_suffix(int copy) { return "." + std::to_string(copy); }

namespace {

// Zero-padding isometric embedding of one wire into a larger dimension.
State embed_wire(const State& s, const std::string& wire,
                 Eigen::Index new_dim) {
  const SystemLabel old = s.op.label(wire);
  if (new_dim == old.dim) return s;
  if (new_dim < old.dim) {
    throw DimensionError("cannot embed wire '" + wire +
                         "' into a smaller dimension");
  }
  std::vector<std::string> order = {wire};
  for (const auto& l : s.op.labels()) {
    if (l.name != wire) order.push_back(l.name);
  }
  const LabeledOperator front = permute_to(s.op, order);
  const Eigen::Index d_rest = front.dim() / old.dim;
  Eigen::MatrixXcd padded =
      Eigen::MatrixXcd::Zero(new_dim * d_rest, new_dim * d_rest);
  padded.topLeftCorner(front.dim(), front.dim()) = front.matrix();
  std::vector<SystemLabel> labels = front.labels();
  labels[0].dim = new_dim;
  return State{
      permute_to(LabeledOperator(std::move(labels), std::move(padded)),
                 s.op.label_names())};
}

}  // namespace

ProtocolResult simulate_protocol(const ProtocolSpec& spec) {
  if (spec.n < 1) throw ValueError("need at least one copy");
  if (int(spec.alice_channels.size()) != spec.n ||
      int(spec.bob_channels.size()) != spec.n) {
    throw ValueError("need one local channel per copy and party");
  }
  if (spec.encode_alice.in_labels().size() != 1 ||
      spec.decode_bob.out_labels().size() != 1) {
    throw LabelError("encoding input and decoding output must be single wires");
  }

  // Per-copy shared channels; the party channels address the process wires
  // through suffixed names, which are stripped for the contraction.
  std::vector<Channel> shared;
  for (int i = 1; i <= spec.n; ++i) {
    const std::string sfx = copy_suffix(i);
    auto strip = [&](const Channel& ch, const char* in_wire,
                     const char* out_wire) {
      return ch.renamed({{in_wire + sfx, in_wire}, {out_wire + sfx, out_wire}});
    };
    const Channel a = strip(spec.alice_channels[size_t(i - 1)], kAliceIn,
                            kAliceOut);
    const Channel b = strip(spec.bob_channels[size_t(i - 1)], kBobIn, kBobOut);
    shared.push_back(insert_parties(mixture(spec.dec), a, b));
  }

  LabeledOperator network = shared[0].choi();
  std::vector<std::string> net_ins = shared[0].in_labels();
  std::vector<std::string> net_outs = shared[0].out_labels();
  for (std::size_t i = 1; i < shared.size(); ++i) {
    network = tensor_product(network, shared[i].choi());
    net_ins.insert(net_ins.end(), shared[i].in_labels().begin(),
                   shared[i].in_labels().end());
    net_outs.insert(net_outs.end(), shared[i].out_labels().begin(),
                    shared[i].out_labels().end());
  }

  // Dimension guard over the distinct wires of the whole network.
  std::unordered_map<std::string, Eigen::Index> wires;
  auto collect = [&](const LabeledOperator& op) {
    for (const auto& l : op.labels()) {
      auto [it, inserted] = wires.emplace(l.name, l.dim);
      if (!inserted && it->second != l.dim) {
        throw DimensionError("wire '" + l.name + "' has mismatched dimensions");
      }
    }
  };
  collect(network);
  collect(spec.encode_alice.choi());
  collect(spec.encode_bob.op);
  collect(spec.decode_bob.choi());
  collect(spec.tau.op);
  double log_total = 0.0;
  for (const auto& [name, dim] : wires) log_total += std::log2(double(dim));
  if (log_total > std::log2(double(spec.max_total_dim)) + 1e-9) {
    throw ValueError("protocol network exceeds the dimension cap");
  }

  LabeledOperator result = link_product(network, spec.encode_alice.choi());
  result = link_product(result, spec.encode_bob.op);
  result = link_product(result, spec.decode_bob.choi());
  result = link_product(result, spec.tau.op);

  // Everything except the reference and the decoded wire must be trivial.
  const std::string decoded = spec.decode_bob.out_labels()[0];
  const std::string message = spec.encode_alice.in_labels()[0];
  std::vector<std::string> dangling;
  for (const auto& l : result.labels()) {
    if (l.name == decoded) continue;
    if (spec.tau.op.has_label(l.name) && l.name != message) continue;
    if (l.dim != 1) {
      throw LabelError("protocol leaves the non-trivial wire '" + l.name +
                       "' unconnected");
    }
    dangling.push_back(l.name);
  }
  if (!dangling.empty()) result = partial_trace(result, dangling);

  State rho_out{result};
  // Compare against tau with the message wire matched to the decoded wire.
  State reference = spec.tau;
  const Eigen::Index d_msg = reference.op.label(message).dim;
  const Eigen::Index d_dec = rho_out.op.label(decoded).dim;
  if (d_msg < d_dec) {
    reference = embed_wire(reference, message, d_dec);
  } else if (d_dec < d_msg) {
    rho_out = embed_wire(rho_out, decoded, d_msg);
  }
  reference = State{reference.op.renamed({{message, decoded}})};
  const double f = fidelity(reference, rho_out);
  return ProtocolResult{std::move(rho_out), f};
}

ProtocolSpec identity_code_protocol(const CausalDecomposition& dec,
                                    double epsilon) {
  const ProcessDims dims = dec.w_ab.dims();
  const std::string sfx = copy_suffix(1);

  const Channel alice =
      routing_alice_channel(dims.a_in, dims.a_out, "A_I'" + sfx)
          .renamed({{kAliceIn, kAliceIn + sfx}, {kAliceOut, kAliceOut + sfx}});

  // Bob forwards B_I to his output ancilla and feeds B_O maximally mixed.
  const LabeledOperator bob_choi = tensor_product(
      tensor_product(
          identity_channel(dims.b_in, kBobIn + sfx, "B_O'" + sfx).choi(),
          LabeledOperator::identity({SystemLabel{kBobOut + sfx, dims.b_out}})
              .scaled(1.0 / double(dims.b_out))),
      LabeledOperator::identity({SystemLabel{"B_I'" + sfx, 1}}));
  const Channel bob(bob_choi, {kBobIn + sfx, "B_I'" + sfx},
                    {kBobOut + sfx, "B_O'" + sfx});

  ProtocolSpec spec{
      .n = 1,
      .dec = dec,
      .alice_channels = {alice},
      .bob_channels = {bob},
      .encode_alice = identity_channel(dims.a_out, "A_E", "A_I'" + sfx),
      .encode_bob =
          State{LabeledOperator::identity({SystemLabel{"B_I'" + sfx, 1}})},
      .decode_bob = identity_channel(dims.b_in, "B_O'" + sfx, "B_D"),
      .tau = maximally_entangled(SystemLabel{"C", dims.a_out},
                                 SystemLabel{"A_E", dims.a_out}),
      .m = dims.a_out,
      .epsilon = epsilon};
  return spec;
}

}  // namespace procmat
