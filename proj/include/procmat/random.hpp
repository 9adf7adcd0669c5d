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
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "procmat/channel.hpp"

namespace procmat {

using Rng = std::mt19937_64;

/// Deterministic generator for (seed, stream); distinct streams of the same
/// seed are independent substreams.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Stateless seed mixer (splitmix64) for deriving per-task seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

/// Matrix with i.i.d. standard complex Gaussian entries.
Eigen::MatrixXcd gaussian_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                                         Rng& rng);

/// Haar-distributed isometry (rows >= cols) via QR of a Gaussian matrix with
/// the phase convention fixed by the R diagonal.
Eigen::MatrixXcd haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Kraus set of a random channel: corners of a Haar isometry into
/// out (x) environment, `env_dim` operators of shape out x in.
std::vector<Eigen::MatrixXcd> random_kraus_set(Eigen::Index in_dim,
                                               Eigen::Index out_dim,
                                               Eigen::Index env_dim, Rng& rng);

/// Full-rank random density operator (Wishart, normalized).
State random_state(std::vector<SystemLabel> labels, Rng& rng);

/// Random CPTP channel between the given wire sets. `env_dim` = 0 picks
/// in_dim * out_dim Kraus operators.
Channel random_cptp_channel(std::vector<SystemLabel> in_labels,
                            std::vector<SystemLabel> out_labels, Rng& rng,
                            Eigen::Index env_dim = 0);

}  // namespace procmat
