// Copyright 2026 The Geocodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace geocodes {

/// Raised when a caller breaks an operation's precondition (bad sizes, even L, non-commuting generators...).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive enumeration would exceed its size guard and was not forced.
struct GuardRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace geocodes
