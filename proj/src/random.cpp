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

#include "procmat/random.hpp"

#include <cmath>

namespace procmat {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + (salt + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Eigen::MatrixXcd gaussian_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                                         Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(r, c) = std::complex<double>(re, im);
    }
  }
  return m;
}

Eigen::MatrixXcd haar_isometry(Eigen::Index rows, Eigen::Index cols,
                               Rng& rng) {
  if (rows < cols) throw DimensionError("isometry needs rows >= cols");
  const Eigen::MatrixXcd g = gaussian_complex_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
  const Eigen::MatrixXcd r = qr.matrixQR().topRows(cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    const std::complex<double> diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0) q.col(k) *= diag / mag;
  }
  return q;
}

std::vector<Eigen::MatrixXcd> random_kraus_set(Eigen::Index in_dim,
                                               Eigen::Index out_dim,
                                               Eigen::Index env_dim,
                                               Rng& rng) {
  if (in_dim < 1 || out_dim < 1 || env_dim < 1) {
    throw DimensionError("Kraus dimensions must be positive");
  }
  // V : in -> out (x) env, rows indexed (a, e) = a * env + e.
  const Eigen::MatrixXcd v = haar_isometry(out_dim * env_dim, in_dim, rng);
  std::vector<Eigen::MatrixXcd> kraus(static_cast<std::size_t>(env_dim));
  for (Eigen::Index e = 0; e < env_dim; ++e) {
    Eigen::MatrixXcd k(out_dim, in_dim);
    for (Eigen::Index a = 0; a < out_dim; ++a) k.row(a) = v.row(a * env_dim + e);
    kraus[static_cast<std::size_t>(e)] = std::move(k);
  }
  return kraus;
}

State random_state(std::vector<SystemLabel> labels, Rng& rng) {
  Eigen::Index d = 1;
  for (const auto& l : labels) d *= l.dim;
  const Eigen::MatrixXcd g = gaussian_complex_matrix(d, d, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return State{LabeledOperator(std::move(labels), std::move(rho))};
}

Channel random_cptp_channel(std::vector<SystemLabel> in_labels,
                            std::vector<SystemLabel> out_labels, Rng& rng,
                            Eigen::Index env_dim) {
  Eigen::Index d_in = 1, d_out = 1;
  for (const auto& l : in_labels) d_in *= l.dim;
  for (const auto& l : out_labels) d_out *= l.dim;
  if (env_dim <= 0) env_dim = d_in * d_out;
  const auto kraus = random_kraus_set(d_in, d_out, env_dim, rng);
  return choi_from_kraus(kraus, std::move(in_labels), std::move(out_labels));
}

}  // namespace procmat
