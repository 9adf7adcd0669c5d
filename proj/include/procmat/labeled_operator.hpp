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

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "procmat/errors.hpp"

namespace procmat {

/// Default relative tolerance for equality and positivity checks.
/// Residual norms are measured in the spectral (sup) norm throughout.
inline constexpr double kDefaultTol = 1e-9;

/// A named subsystem together with its Hilbert-space dimension.
struct SystemLabel {
  std::string name;
  Eigen::Index dim = 1;

  friend bool operator==(const SystemLabel&, const SystemLabel&) = default;
};

/// Complex square matrix over an ordered list of named subsystems.
///
/// The composite index runs row-major over the label list: the first label
/// is the most significant digit. A zero-label operator is a 1x1 scalar.
/// Hermiticity is not an invariant of the type; operations that need it
/// check it explicitly. All operations on LabeledOperator are pure.
class LabeledOperator {
 public:
  LabeledOperator(std::vector<SystemLabel> labels, Eigen::MatrixXcd matrix);

  /// Unnormalized identity on the given subsystems.
  static LabeledOperator identity(std::vector<SystemLabel> labels);
  /// 1x1 operator with no subsystems.
  static LabeledOperator scalar(std::complex<double> value);

  const std::vector<SystemLabel>& labels() const { return labels_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  std::complex<double> trace() const { return matrix_.trace(); }

  bool has_label(std::string_view name) const;
  /// Position of a label in the label list; throws LabelError if absent.
  std::size_t label_index(std::string_view name) const;
  const SystemLabel& label(std::string_view name) const;
  std::vector<std::string> label_names() const;
  /// Product dimension of the named subset.
  Eigen::Index dim_of(const std::vector<std::string>& names) const;

  /// Relabels subsystems through an old-name -> new-name map, applied
  /// simultaneously (swaps are fine). Names not in the map are kept.
  LabeledOperator renamed(
      const std::vector<std::pair<std::string, std::string>>& renames) const;

  LabeledOperator scaled(std::complex<double> factor) const;

  /// Elementwise sum/difference; the right operand is aligned to the left
  /// operand's label order and must carry the same label set.
  friend LabeledOperator operator+(const LabeledOperator& a,
                                   const LabeledOperator& b);
  friend LabeledOperator operator-(const LabeledOperator& a,
                                   const LabeledOperator& b);

 private:
  std::vector<SystemLabel> labels_;
  Eigen::MatrixXcd matrix_;
};

/// Kronecker composition; label lists are concatenated m-then-n and must be
/// name-disjoint.
LabeledOperator tensor_product(const LabeledOperator& m,
                               const LabeledOperator& n);

/// Traces out the named subsystems. Tracing all labels yields a scalar
/// operator holding Tr(m).
LabeledOperator partial_trace(const LabeledOperator& m,
                              const std::vector<std::string>& over);

/// Transposes the named subsystems in the computational basis; involutive.
LabeledOperator partial_transpose(const LabeledOperator& m,
                                  const std::vector<std::string>& on);

/// Discards the named subsystems and reinstalls the normalized identity on
/// them: (id_X / d_X) (x) Tr_X m, with m's original label order preserved.
LabeledOperator trace_replace(const LabeledOperator& m,
                              const std::vector<std::string>& over);

/// Contraction over the subsystems shared by name: Tr_s[m^{T_s} n], with
/// each operator acting as the identity outside its own support. The result
/// carries m's then n's exclusive labels; with no shared labels this is the
/// tensor product, with all labels shared it is the scalar Tr(m^T n).
LabeledOperator link_product(const LabeledOperator& m,
                             const LabeledOperator& n);

/// Positive-semidefiniteness at relative tolerance `tol`. The operator must
/// be Hermitian within tol (relative to its spectral norm); otherwise
/// NonHermitianError is raised rather than returning false. Eigenvalues are
/// taken on the Hermitized part (m + m^dagger)/2.
bool is_psd(const LabeledOperator& m, double tol = kDefaultTol);

/// Reorders the label list; `order` must be a permutation of m's names.
LabeledOperator permute_to(const LabeledOperator& m,
                           const std::vector<std::string>& order);

/// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& a);

/// Spectral-norm distance between two operators on the same label set,
/// aligning label order first.
double operator_distance(const LabeledOperator& x, const LabeledOperator& y);

}  // namespace procmat
