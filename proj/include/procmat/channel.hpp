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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "procmat/labeled_operator.hpp"

namespace procmat {

/// Quantum channel in Choi form.
///
/// The Choi operator is unnormalized: a trace-preserving channel has
/// Tr(choi) = input dimension. Input and output wires are tracked by name,
/// so channels with several wires on either side compose without positional
/// conventions. choi_from_kraus stores the output factor first.
class Channel {
 public:
  Channel(LabeledOperator choi, std::vector<std::string> in_labels,
          std::vector<std::string> out_labels);

  const LabeledOperator& choi() const { return choi_; }
  const std::vector<std::string>& in_labels() const { return in_labels_; }
  const std::vector<std::string>& out_labels() const { return out_labels_; }

  Eigen::Index in_dim() const { return choi_.dim_of(in_labels_); }
  Eigen::Index out_dim() const { return choi_.dim_of(out_labels_); }
  std::vector<SystemLabel> in_system_labels() const;
  std::vector<SystemLabel> out_system_labels() const;

  Channel renamed(
      const std::vector<std::pair<std::string, std::string>>& renames) const;

 private:
  LabeledOperator choi_;
  std::vector<std::string> in_labels_;
  std::vector<std::string> out_labels_;
};

/// Density operator: a channel with no input wires and unit trace.
struct State {
  LabeledOperator op;

  /// Validating factory: PSD within tol and trace 1 within tol.
  static State from_operator(LabeledOperator op, double tol = kDefaultTol);
};

/// CPTP diagnostic: positivity of the Choi operator and the spectral-norm
/// distance of the traced-out Choi from the input identity.
struct CptpReport {
  bool psd = false;
  double tp_residual = 0.0;

  bool ok(double tol = kDefaultTol) const { return psd && tp_residual <= tol; }
};

/// Builds the Choi operator of the map X -> sum_k K X K^dagger on the given
/// wires. Kraus operators are out_dim x in_dim. Completeness is not
/// enforced; is_cptp reports it.
Channel choi_from_kraus(const std::vector<Eigen::MatrixXcd>& kraus,
                        std::vector<SystemLabel> in_labels,
                        std::vector<SystemLabel> out_labels);
Channel choi_from_kraus(const std::vector<Eigen::MatrixXcd>& kraus,
                        SystemLabel in_label, SystemLabel out_label);

CptpReport is_cptp(const Channel& c, double tol = kDefaultTol);

/// Applies the channel: link of the state with the Choi operator. State
/// labels must cover the channel inputs; extra labels ride along untouched.
State apply(const Channel& c, const State& rho);

/// Linear action on an arbitrary operator (no state checks).
LabeledOperator apply_to_operator(const Channel& c, const LabeledOperator& x);

/// Erasure channel on dimension d: rho -> p * rho (+) (1-p) |e><e| where the
/// flag |e> is the last basis vector of the (d+1)-dimensional output.
Channel erasure_channel(double p, Eigen::Index d,
                        const std::string& in_name = "in",
                        const std::string& out_name = "out");

Channel identity_channel(Eigen::Index d, const std::string& in_name = "in",
                         const std::string& out_name = "out");

/// Constant channel from a trivial (dim-1) input to the given state.
Channel preparation_channel(const State& sigma,
                            const std::string& in_name = "in");

/// Discards a d-dimensional input into a trivial (dim-1) output.
Channel trace_channel(Eigen::Index d, const std::string& in_name = "in",
                      const std::string& out_name = "out");

/// second after first. Wire lists are matched positionally and must agree in
/// dimension; the intermediate wire is renamed internally.
Channel compose(const Channel& second, const Channel& first);

/// Squared Uhlmann fidelity F = (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2.
double fidelity(const State& rho, const State& sigma);

State basis_state(SystemLabel label, Eigen::Index k);
State maximally_mixed(SystemLabel label);
State maximally_entangled(SystemLabel a, SystemLabel b);

}  // namespace procmat
