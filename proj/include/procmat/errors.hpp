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

#include <stdexcept>
#include <string>

namespace procmat {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unknown, duplicate or otherwise unusable subsystem label.
struct LabelError : Error {
  using Error::Error;
};

/// Subsystem dimensions do not line up.
struct DimensionError : Error {
  using Error::Error;
};

/// Operator failed the Hermiticity gate of a positivity check.
struct NonHermitianError : Error {
  using Error::Error;
};

/// Value outside its admissible range (probabilities, shapes, states, ...).
struct ValueError : Error {
  using Error::Error;
};

}  // namespace procmat
