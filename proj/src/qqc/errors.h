// Copyright 2026 The qqc Authors
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

#ifndef QQC_ERRORS_H
#define QQC_ERRORS_H

#include <stdexcept>
#include <string>

namespace qqc {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: wire indices, input lengths, arities, bad parameters.
struct UsageError : Error {
    using Error::Error;
};

/// A gate kind or parameter has no inverse inside the amplitude ring.
struct NotInvertibleError : Error {
    using Error::Error;
};

/// A construction precondition failed on a concrete input. `witness` names
/// the offending input bit string (or basis term) when there is one.
struct PreconditionError : Error {
    PreconditionError(const std::string &message, std::string witness)
        : Error(message), witness(std::move(witness)) {
    }
    std::string witness;
};

/// A simulated state disagreed with the state it was required to equal.
/// Raised by the exact checks (ancilla restoration, decider residuals).
struct MismatchError : Error {
    MismatchError(const std::string &message, std::string term) : Error(message), term(std::move(term)) {
    }
    std::string term;
};

/// Problem-spec, JSON or DSL input could not be accepted.
struct SpecError : Error {
    using Error::Error;
};

}  // namespace qqc

#endif
