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

#include <json.hpp>

#include "procmat/capacity.hpp"
#include "procmat/process.hpp"
#include "procmat/reduction.hpp"

namespace procmat {

// Operator schema:
//   { "labels": [{"name": str, "dim": int}, ...],
//     "matrix": [[[re, im], ...], ...] }
// with matrix rows in the row-major composite basis of the label list.
nlohmann::json operator_to_json(const LabeledOperator& op);
LabeledOperator operator_from_json(const nlohmann::json& j);

// Channel schema: { "in": [names], "out": [names], "choi": operator } or,
// for single-wire channels, { "in": [names], "out": [names],
// "kraus": [matrix, ...] } with dimensions taken from the Kraus shape.
nlohmann::json channel_to_json(const Channel& c);
Channel channel_from_json(const nlohmann::json& j);

// States are serialized as bare operators.
nlohmann::json state_to_json(const State& s);
State state_from_json(const nlohmann::json& j, double tol = kDefaultTol);

// Process schema: { "dims": {"A_I":., "A_O":., "B_I":., "B_O":.},
//                   "op": operator } in canonical label order.
nlohmann::json process_to_json(const ProcessMatrix& w);
ProcessMatrix process_from_json(const nlohmann::json& j);

// Decomposition schema: { "p": ., "w_ab": process, "w_ba": process }.
nlohmann::json decomposition_to_json(const CausalDecomposition& dec);
CausalDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json validity_report_to_json(const ProcessValidityReport& report);
nlohmann::json reduction_report_to_json(const ReductionReport& report);

// Protocol schema (explicit form):
//   { "n": int, "epsilon": real, "m": int, "decomposition": ...,
//     "alice": [channel, ...], "bob": [channel, ...],
//     "e_a": channel, "e_b": state, "d_b": channel, "tau": state }
// or the shorthand { "identity_code": {"p": ., "d": .}, "epsilon": . }.
ProtocolSpec protocol_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace procmat
