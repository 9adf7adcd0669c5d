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

#include "procmat/channel.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace procmat {

namespace {

void check_wire_partition(const LabeledOperator& choi,
                          const std::vector<std::string>& ins,
                          const std::vector<std::string>& outs) {
  std::unordered_set<std::string> seen;
  for (const auto& n : ins) {
    choi.label_index(n);
    if (!seen.insert(n).second) throw LabelError("wire listed twice: '" + n + "'");
  }
  for (const auto& n : outs) {
    choi.label_index(n);
    if (!seen.insert(n).second) throw LabelError("wire listed twice: '" + n + "'");
  }
  if (seen.size() != choi.labels().size()) {
    throw LabelError("channel wires do not cover all Choi labels");
  }
}

// Hermitian square root with negative eigenvalues clamped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * vals.asDiagonal() *
         solver.eigenvectors().adjoint();
}

std::string fresh_name(const std::string& base,
                       const std::unordered_set<std::string>& taken) {
  std::string name = base;
  int k = 0;
  while (taken.count(name)) name = base + "." + std::to_string(k++);
  return name;
}

}  // namespace

Channel::Channel(LabeledOperator choi, std::vector<std::string> in_labels,
                 std::vector<std::string> out_labels)
    : choi_(std::move(choi)),
      in_labels_(std::move(in_labels)),
      out_labels_(std::move(out_labels)) {
  check_wire_partition(choi_, in_labels_, out_labels_);
}

std::vector<SystemLabel> Channel::in_system_labels() const {
  std::vector<SystemLabel> labels;
  for (const auto& n : in_labels_) labels.push_back(choi_.label(n));
  return labels;
}

std::vector<SystemLabel> Channel::out_system_labels() const {
  std::vector<SystemLabel> labels;
  for (const auto& n : out_labels_) labels.push_back(choi_.label(n));
  return labels;
}

Channel Channel::renamed(
    const std::vector<std::pair<std::string, std::string>>& renames) const {
  auto rename_list = [&](std::vector<std::string> names) {
    for (auto& n : names) {
      for (const auto& [from, to] : renames) {
        if (n == from) {
          n = to;
          break;
        }
      }
    }
    return names;
  };
  return Channel(choi_.renamed(renames), rename_list(in_labels_),
                 rename_list(out_labels_));
}

State State::from_operator(LabeledOperator op, double tol) {
  if (!is_psd(op, tol)) {
    throw ValueError("state operator is not positive semidefinite");
  }
  if (std::abs(op.trace() - std::complex<double>(1.0)) > tol) {
    throw ValueError("state operator does not have unit trace");
  }
  return State{std::move(op)};
}

Channel choi_from_kraus(const std::vector<Eigen::MatrixXcd>& kraus,
                        std::vector<SystemLabel> in_labels,
                        std::vector<SystemLabel> out_labels) {
  if (kraus.empty()) throw ValueError("empty Kraus set");
  Eigen::Index d_in = 1, d_out = 1;
  for (const auto& l : in_labels) d_in *= l.dim;
  for (const auto& l : out_labels) d_out *= l.dim;
  for (const auto& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw DimensionError("Kraus operator shape " + std::to_string(k.rows()) +
                           "x" + std::to_string(k.cols()) +
                           " does not match wires " + std::to_string(d_out) +
                           "x" + std::to_string(d_in));
    }
  }

  // choi[(a,b),(c,d)] = sum_k K(a,b) conj(K(c,d)), output factor first.
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(d_out * d_in, d_out * d_in);
  for (const auto& k : kraus) {
    Eigen::VectorXcd v(d_out * d_in);
    for (Eigen::Index a = 0; a < d_out; ++a) {
      for (Eigen::Index b = 0; b < d_in; ++b) v(a * d_in + b) = k(a, b);
    }
    choi.noalias() += v * v.adjoint();
  }

  std::vector<std::string> ins, outs;
  std::vector<SystemLabel> labels;
  for (auto& l : out_labels) {
    outs.push_back(l.name);
    labels.push_back(std::move(l));
  }
  for (auto& l : in_labels) {
    ins.push_back(l.name);
    labels.push_back(std::move(l));
  }
  return Channel(LabeledOperator(std::move(labels), std::move(choi)),
                 std::move(ins), std::move(outs));
}

Channel choi_from_kraus(const std::vector<Eigen::MatrixXcd>& kraus,
                        SystemLabel in_label, SystemLabel out_label) {
  return choi_from_kraus(kraus, std::vector<SystemLabel>{std::move(in_label)},
                         std::vector<SystemLabel>{std::move(out_label)});
}

CptpReport is_cptp(const Channel& c, double tol) {
  CptpReport report;
  try {
    report.psd = is_psd(c.choi(), tol);
  } catch (const NonHermitianError&) {
    report.psd = false;
  }
  const LabeledOperator traced = partial_trace(c.choi(), c.out_labels());
  const LabeledOperator id_in =
      LabeledOperator::identity(c.in_system_labels());
  report.tp_residual = operator_distance(traced, id_in);
  return report;
}

LabeledOperator apply_to_operator(const Channel& c, const LabeledOperator& x) {
  for (const auto& n : c.in_labels()) {
    x.label_index(n);  // inputs must all be present
  }
  for (const auto& l : x.labels()) {
    const bool is_input =
        std::find(c.in_labels().begin(), c.in_labels().end(), l.name) !=
        c.in_labels().end();
    if (!is_input && c.choi().has_label(l.name)) {
      throw LabelError("state label '" + l.name +
                       "' collides with a channel output wire");
    }
  }
  return link_product(x, c.choi());
}

State apply(const Channel& c, const State& rho) {
  return State{apply_to_operator(c, rho.op)};
}

Channel erasure_channel(double p, Eigen::Index d, const std::string& in_name,
                        const std::string& out_name) {
  if (p < 0.0 || p > 1.0) {
    throw ValueError("erasure probability " + std::to_string(p) +
                     " outside [0, 1]");
  }
  if (d < 2) throw DimensionError("erasure channel needs dimension >= 2");

  std::vector<Eigen::MatrixXcd> kraus;
  Eigen::MatrixXcd embed = Eigen::MatrixXcd::Zero(d + 1, d);
  embed.topRows(d) = Eigen::MatrixXcd::Identity(d, d) * std::sqrt(p);
  kraus.push_back(embed);
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::MatrixXcd flag = Eigen::MatrixXcd::Zero(d + 1, d);
    flag(d, i) = std::sqrt(1.0 - p);
    kraus.push_back(flag);
  }
  return choi_from_kraus(kraus, SystemLabel{in_name, d},
                         SystemLabel{out_name, d + 1});
}

Channel identity_channel(Eigen::Index d, const std::string& in_name,
                         const std::string& out_name) {
  return choi_from_kraus({Eigen::MatrixXcd::Identity(d, d)},
                         SystemLabel{in_name, d}, SystemLabel{out_name, d});
}

Channel preparation_channel(const State& sigma, const std::string& in_name) {
  for (const auto& l : sigma.op.labels()) {
    if (l.name == in_name) {
      throw LabelError("preparation input wire '" + in_name +
                       "' collides with the prepared state");
    }
  }
  const LabeledOperator in_id =
      LabeledOperator::identity({SystemLabel{in_name, 1}});
  return Channel(tensor_product(sigma.op, in_id), {in_name},
                 sigma.op.label_names());
}

Channel trace_channel(Eigen::Index d, const std::string& in_name,
                      const std::string& out_name) {
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Identity(d, d);
  return Channel(LabeledOperator({SystemLabel{out_name, 1},
                                  SystemLabel{in_name, d}},
                                 std::move(choi)),
                 {in_name}, {out_name});
}

Channel compose(const Channel& second, const Channel& first) {
  const auto wire_out = first.out_system_labels();
  const auto wire_in = second.in_system_labels();
  if (wire_out.size() != wire_in.size()) {
    throw DimensionError("cannot compose: " + std::to_string(wire_out.size()) +
                         " outputs feeding " + std::to_string(wire_in.size()) +
                         " inputs");
  }
  for (std::size_t k = 0; k < wire_out.size(); ++k) {
    if (wire_out[k].dim != wire_in[k].dim) {
      throw DimensionError("cannot compose: wire dimension " +
                           std::to_string(wire_out[k].dim) + " feeding " +
                           std::to_string(wire_in[k].dim));
    }
  }

  std::unordered_set<std::string> taken;
  for (const auto& l : first.choi().labels()) taken.insert(l.name);
  for (const auto& l : second.choi().labels()) taken.insert(l.name);
  for (const auto& n : first.in_labels()) {
    if (std::find(second.out_labels().begin(), second.out_labels().end(), n) !=
        second.out_labels().end()) {
      throw LabelError("composition would duplicate wire '" + n +
                       "'; relabel one of the channels");
    }
  }

  std::vector<std::pair<std::string, std::string>> first_renames;
  std::vector<std::pair<std::string, std::string>> second_renames;
  for (std::size_t k = 0; k < wire_out.size(); ++k) {
    const std::string mid = fresh_name("#w" + std::to_string(k), taken);
    taken.insert(mid);
    first_renames.emplace_back(wire_out[k].name, mid);
    second_renames.emplace_back(wire_in[k].name, mid);
  }
  const Channel f = first.renamed(first_renames);
  const Channel s = second.renamed(second_renames);
  return Channel(link_product(f.choi(), s.choi()), f.in_labels(),
                 s.out_labels());
}

double fidelity(const State& rho, const State& sigma) {
  const double tol = kDefaultTol;
  if (!is_psd(rho.op, tol) || !is_psd(sigma.op, tol)) {
    throw ValueError("fidelity requires positive semidefinite states");
  }
  if (std::abs(rho.op.trace() - std::complex<double>(1.0)) > tol ||
      std::abs(sigma.op.trace() - std::complex<double>(1.0)) > tol) {
    throw ValueError("fidelity requires unit-trace states");
  }
  const LabeledOperator sig = permute_to(sigma.op, rho.op.label_names());
  const Eigen::MatrixXcd s = psd_sqrt(sig.matrix());
  const Eigen::MatrixXcd inner = s * rho.op.matrix() * s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  const double root_sum =
      solver.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

State basis_state(SystemLabel label, Eigen::Index k) {
  if (k < 0 || k >= label.dim) {
    throw ValueError("basis index " + std::to_string(k) +
                     " outside dimension " + std::to_string(label.dim));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(label.dim, label.dim);
  m(k, k) = 1.0;
  return State{LabeledOperator({std::move(label)}, std::move(m))};
}

State maximally_mixed(SystemLabel label) {
  const Eigen::Index d = label.dim;
  return State{LabeledOperator::identity({std::move(label)})
                   .scaled(1.0 / double(d))};
}

State maximally_entangled(SystemLabel a, SystemLabel b) {
  if (a.dim != b.dim) {
    throw DimensionError("maximally entangled state needs equal dimensions");
  }
  const Eigen::Index d = a.dim;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
  for (Eigen::Index i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return State{LabeledOperator({std::move(a), std::move(b)}, v * v.adjoint())};
}

}  // namespace procmat
