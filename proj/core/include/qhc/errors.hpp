// Copyright 2026 The qhc authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>

namespace qhc {

/// Invalid run or build configuration: qubit counts, layer counts,
/// epochs, step sizes, split fractions.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract data: CSV rows, labels, shape
/// mismatches, non-finite values.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Model file problems: unreadable, unknown version, wrong shapes.
struct persistence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite values produced while training.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qhc
