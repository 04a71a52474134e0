// Copyright 2026 The qipflow Authors
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

#ifndef QIPFLOW_ERRORS_H
#define QIPFLOW_ERRORS_H

#include <stdexcept>
#include <string>

namespace qipflow {

/// Raised when an argument violates a documented precondition. The message
/// names the check that failed.
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative or adaptive routine cannot meet its tolerance.
class NumericalFailure : public std::runtime_error {
   public:
    explicit NumericalFailure(const std::string &what, double best_estimate = 0.0)
        : std::runtime_error(what), best_estimate_(best_estimate) {
    }

    double best_estimate() const {
        return best_estimate_;
    }

   private:
    double best_estimate_;
};

/// Raised when an intermediate dynamical map would require dividing by a
/// vanishing channel parameter. Callers skip and record the interval.
class SingularIntermediateMap : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

}  // namespace qipflow

#endif
