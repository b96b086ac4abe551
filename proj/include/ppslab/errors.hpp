// Copyright 2026 The ppslab Authors
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

namespace ppslab {

/// Base class for every error raised by ppslab.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// A ket or operator violates its construction invariants (non-finite
/// entries, norm above one, wrong shape).
class InvalidValue : public Error {
   public:
    using Error::Error;
};

class NotAProjector : public Error {
   public:
    using Error::Error;
};

/// Raised when an operation divides by a strength below kMinStrength.
class SingularStrength : public Error {
   public:
    using Error::Error;
};

/// Pre- and postselection are orthogonal, so the weak value is undefined.
class UndefinedWeakValue : public Error {
   public:
    using Error::Error;
};

/// Both the "yes" and "no" amplitudes vanish, or the postselection
/// probability is zero.
class DegenerateScenario : public Error {
   public:
    using Error::Error;
};

/// A circuit stage annihilated the state.
class DegenerateRun : public Error {
   public:
    DegenerateRun(std::string stage, const std::string& what)
        : Error(what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

   private:
    std::string stage_;
};

class InvalidDistribution : public Error {
   public:
    using Error::Error;
};

}  // namespace ppslab
