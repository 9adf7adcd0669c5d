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

#include "procmat/labeled_operator.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <unsupported/Eigen/KroneckerProduct>

namespace procmat {

namespace {

Eigen::Index product_dim(const std::vector<SystemLabel>& labels) {
  Eigen::Index d = 1;
  for (const auto& l : labels) d *= l.dim;
  return d;
}

// Row-major strides: strides[k] multiplies the digit of label k.
std::vector<Eigen::Index> strides_for(const std::vector<SystemLabel>& labels) {
  std::vector<Eigen::Index> strides(labels.size(), 1);
  for (std::size_t k = labels.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * labels[k].dim;
  }
  return strides;
}

// Splits m's labels into (kept, picked) preserving m's order; every name in
// `names` must exist in m and be listed once.
void split_labels(const LabeledOperator& m, const std::vector<std::string>& names,
                  std::vector<std::string>& kept, std::vector<std::string>& picked) {
  std::unordered_set<std::string> wanted;
  for (const auto& n : names) {
    m.label_index(n);  // throws LabelError on unknown names
    if (!wanted.insert(n).second) {
      throw LabelError("label listed twice: '" + n + "'");
    }
  }
  for (const auto& l : m.labels()) {
    if (wanted.count(l.name)) {
      picked.push_back(l.name);
    } else {
      kept.push_back(l.name);
    }
  }
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

LabeledOperator::LabeledOperator(std::vector<SystemLabel> labels,
                                 Eigen::MatrixXcd matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.name.empty()) throw LabelError("empty label name");
    if (l.dim < 1) {
      throw DimensionError("label '" + l.name + "' has dimension " +
                           std::to_string(l.dim));
    }
    if (!seen.insert(l.name).second) {
      throw LabelError("duplicate label name: '" + l.name + "'");
    }
  }
  if (matrix_.rows() != matrix_.cols()) {
    throw DimensionError("operator matrix is not square");
  }
  if (matrix_.rows() != product_dim(labels_)) {
    throw DimensionError("matrix dimension " + std::to_string(matrix_.rows()) +
                         " does not match label dimension product " +
                         std::to_string(product_dim(labels_)));
  }
}

LabeledOperator LabeledOperator::identity(std::vector<SystemLabel> labels) {
  const Eigen::Index d = product_dim(labels);
  return LabeledOperator(std::move(labels), Eigen::MatrixXcd::Identity(d, d));
}

LabeledOperator LabeledOperator::scalar(std::complex<double> value) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = value;
  return LabeledOperator({}, std::move(m));
}

bool LabeledOperator::has_label(std::string_view name) const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [&](const SystemLabel& l) { return l.name == name; });
}

std::size_t LabeledOperator::label_index(std::string_view name) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k].name == name) return k;
  }
  throw LabelError("unknown label: '" + std::string(name) + "'");
}

const SystemLabel& LabeledOperator::label(std::string_view name) const {
  return labels_[label_index(name)];
}

std::vector<std::string> LabeledOperator::label_names() const {
  std::vector<std::string> names;
  names.reserve(labels_.size());
  for (const auto& l : labels_) names.push_back(l.name);
  return names;
}

Eigen::Index LabeledOperator::dim_of(const std::vector<std::string>& names) const {
  Eigen::Index d = 1;
  for (const auto& n : names) d *= label(n).dim;
  return d;
}

LabeledOperator LabeledOperator::renamed(
    const std::vector<std::pair<std::string, std::string>>& renames) const {
  std::unordered_map<std::string, std::string> map;
  for (const auto& [from, to] : renames) {
    label_index(from);  // must exist
    if (!map.emplace(from, to).second) {
      throw LabelError("label renamed twice: '" + from + "'");
    }
  }
  std::vector<SystemLabel> new_labels = labels_;
  for (auto& l : new_labels) {
    auto it = map.find(l.name);
    if (it != map.end()) l.name = it->second;
  }
  return LabeledOperator(std::move(new_labels), matrix_);
}

LabeledOperator LabeledOperator::scaled(std::complex<double> factor) const {
  return LabeledOperator(labels_, matrix_ * factor);
}

LabeledOperator operator+(const LabeledOperator& a, const LabeledOperator& b) {
  const LabeledOperator bp = permute_to(b, a.label_names());
  for (std::size_t k = 0; k < a.labels_.size(); ++k) {
    if (bp.labels_[k].dim != a.labels_[k].dim) {
      throw DimensionError("dimension mismatch on label '" +
                           a.labels_[k].name + "'");
    }
  }
  return LabeledOperator(a.labels_, a.matrix_ + bp.matrix_);
}

LabeledOperator operator-(const LabeledOperator& a, const LabeledOperator& b) {
  return a + b.scaled(-1.0);
}

LabeledOperator tensor_product(const LabeledOperator& m,
                               const LabeledOperator& n) {
  for (const auto& l : n.labels()) {
    if (m.has_label(l.name)) {
      throw LabelError("duplicate label in tensor product: '" + l.name + "'");
    }
  }
  std::vector<SystemLabel> labels = m.labels();
  labels.insert(labels.end(), n.labels().begin(), n.labels().end());
  Eigen::MatrixXcd out = Eigen::kroneckerProduct(m.matrix(), n.matrix());
  return LabeledOperator(std::move(labels), std::move(out));
}

LabeledOperator permute_to(const LabeledOperator& m,
                           const std::vector<std::string>& order) {
  const auto& labels = m.labels();
  if (order.size() != labels.size()) {
    throw LabelError("label order has " + std::to_string(order.size()) +
                     " names, operator has " + std::to_string(labels.size()));
  }
  std::vector<std::size_t> src(order.size());
  std::vector<bool> used(labels.size(), false);
  bool already_ordered = true;
  for (std::size_t j = 0; j < order.size(); ++j) {
    src[j] = m.label_index(order[j]);
    if (used[src[j]]) {
      throw LabelError("label listed twice in order: '" + order[j] + "'");
    }
    used[src[j]] = true;
    if (src[j] != j) already_ordered = false;
  }
  if (already_ordered) return m;

  std::vector<SystemLabel> new_labels(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) new_labels[j] = labels[src[j]];

  const auto old_strides = strides_for(labels);
  const auto new_strides = strides_for(new_labels);
  const Eigen::Index d = m.dim();
  std::vector<Eigen::Index> to_new(static_cast<std::size_t>(d));
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    Eigen::Index out = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      const Eigen::Index digit =
          (idx / old_strides[src[j]]) % labels[src[j]].dim;
      out += digit * new_strides[j];
    }
    to_new[static_cast<std::size_t>(idx)] = out;
  }

  Eigen::MatrixXcd out(d, d);
  const auto& in = m.matrix();
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      out(to_new[static_cast<std::size_t>(r)],
          to_new[static_cast<std::size_t>(c)]) = in(r, c);
    }
  }
  return LabeledOperator(std::move(new_labels), std::move(out));
}

LabeledOperator partial_trace(const LabeledOperator& m,
                              const std::vector<std::string>& over) {
  if (over.empty()) return m;
  std::vector<std::string> kept, traced;
  split_labels(m, over, kept, traced);

  const LabeledOperator mp = permute_to(m, concat(kept, traced));
  const Eigen::Index d_traced = m.dim_of(traced);
  const Eigen::Index d_kept = mp.dim() / d_traced;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d_kept, d_kept);
  const auto& in = mp.matrix();
  for (Eigen::Index i = 0; i < d_kept; ++i) {
    for (Eigen::Index j = 0; j < d_kept; ++j) {
      out(i, j) = in.block(i * d_traced, j * d_traced, d_traced, d_traced)
                      .trace();
    }
  }
  std::vector<SystemLabel> kept_labels(mp.labels().begin(),
                                       mp.labels().begin() + kept.size());
  return LabeledOperator(std::move(kept_labels), std::move(out));
}

LabeledOperator partial_transpose(const LabeledOperator& m,
                                  const std::vector<std::string>& on) {
  if (on.empty()) return m;
  std::vector<std::string> kept, picked;
  split_labels(m, on, kept, picked);

  const LabeledOperator mp = permute_to(m, concat(kept, picked));
  const Eigen::Index d_t = m.dim_of(picked);
  const Eigen::Index d_k = mp.dim() / d_t;

  Eigen::MatrixXcd out(mp.dim(), mp.dim());
  const auto& in = mp.matrix();
  for (Eigen::Index i = 0; i < d_k; ++i) {
    for (Eigen::Index j = 0; j < d_k; ++j) {
      out.block(i * d_t, j * d_t, d_t, d_t) =
          in.block(i * d_t, j * d_t, d_t, d_t).transpose();
    }
  }
  return permute_to(LabeledOperator(mp.labels(), std::move(out)),
                    m.label_names());
}

LabeledOperator trace_replace(const LabeledOperator& m,
                              const std::vector<std::string>& over) {
  if (over.empty()) return m;
  std::vector<std::string> kept, replaced;
  split_labels(m, over, kept, replaced);

  std::vector<SystemLabel> replaced_labels;
  for (const auto& name : replaced) replaced_labels.push_back(m.label(name));
  const Eigen::Index d_replaced = m.dim_of(replaced);

  const LabeledOperator traced = partial_trace(m, over);
  const LabeledOperator id_part =
      LabeledOperator::identity(replaced_labels).scaled(1.0 / double(d_replaced));
  return permute_to(tensor_product(traced, id_part), m.label_names());
}

LabeledOperator link_product(const LabeledOperator& m,
                             const LabeledOperator& n) {
  std::vector<std::string> shared, a_names, b_names;
  for (const auto& l : m.labels()) {
    if (n.has_label(l.name)) {
      if (n.label(l.name).dim != l.dim) {
        throw DimensionError("shared label '" + l.name +
                             "' has mismatched dimensions " +
                             std::to_string(l.dim) + " and " +
                             std::to_string(n.label(l.name).dim));
      }
      shared.push_back(l.name);
    } else {
      a_names.push_back(l.name);
    }
  }
  for (const auto& l : n.labels()) {
    if (!m.has_label(l.name)) b_names.push_back(l.name);
  }

  const LabeledOperator mp = permute_to(m, concat(a_names, shared));
  const LabeledOperator np = permute_to(n, concat(b_names, shared));
  const Eigen::Index d_s = m.dim_of(shared);
  const Eigen::Index d_a = mp.dim() / d_s;
  const Eigen::Index d_b = np.dim() / d_s;

  // Entry formula, with s the shared block index:
  //   out[(ia,ib),(ja,jb)] = sum_{k,t} m[(ia,k),(ja,t)] * n[(k,ib),(t,jb)]
  // and np laid out (b, s) so that np[(ib,k),(jb,t)] = n[(k,ib),(t,jb)].
  Eigen::MatrixXcd out(d_a * d_b, d_a * d_b);
  const auto& am = mp.matrix();
  const auto& bm = np.matrix();
  for (Eigen::Index ia = 0; ia < d_a; ++ia) {
    for (Eigen::Index ja = 0; ja < d_a; ++ja) {
      const auto ablk = am.block(ia * d_s, ja * d_s, d_s, d_s);
      for (Eigen::Index ib = 0; ib < d_b; ++ib) {
        for (Eigen::Index jb = 0; jb < d_b; ++jb) {
          out(ia * d_b + ib, ja * d_b + jb) =
              ablk.cwiseProduct(bm.block(ib * d_s, jb * d_s, d_s, d_s)).sum();
        }
      }
    }
  }

  std::vector<SystemLabel> labels;
  for (const auto& name : a_names) labels.push_back(m.label(name));
  for (const auto& name : b_names) labels.push_back(n.label(name));
  return LabeledOperator(std::move(labels), std::move(out));
}

bool is_psd(const LabeledOperator& m, double tol) {
  const auto& a = m.matrix();
  const double norm = spectral_norm(a);
  const double herm_residual = spectral_norm(a - a.adjoint());
  if (herm_residual > tol * norm) {
    throw NonHermitianError("operator is not Hermitian: residual " +
                            std::to_string(herm_residual));
  }
  const Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues()(0);
  return min_eig >= -tol * std::max(1.0, norm);
}

double spectral_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

double operator_distance(const LabeledOperator& x, const LabeledOperator& y) {
  const LabeledOperator yal = permute_to(y, x.label_names());
  for (std::size_t k = 0; k < x.labels().size(); ++k) {
    if (yal.labels()[k].dim != x.labels()[k].dim) {
      throw DimensionError("dimension mismatch on label '" +
                           x.labels()[k].name + "'");
    }
  }
  return spectral_norm(x.matrix() - yal.matrix());
}

}  // namespace procmat
