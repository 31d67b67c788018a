// Copyright 2026 The catrep Authors
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

namespace catrep {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mode lists do not line up: unknown label, duplicate label, or mismatched sets.
struct ModeError : Error {
    using Error::Error;
};

/// A state whose norm is too small to normalize (e.g. an odd cat with alpha = 0).
struct DegenerateState : Error {
    using Error::Error;
};

/// A post-selected projection whose success weight vanished.
struct DegenerateProjection : Error {
    using Error::Error;
};

/// A parameter outside its allowed range.
struct InvalidArgument : Error {
    using Error::Error;
};

/// Numerical guard tripped: Fock cutoff too small, memory budget exceeded, trace off.
struct NumericGuard : Error {
    using Error::Error;
};

}  // namespace catrep
