// SPDX-License-Identifier: Apache-2.0
//
// sree: energy-efficiency region toolkit for MISO symbiotic radio links
// Copyright (C) 2026 The sree authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SREE_ERRORS_HPP
#define SREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sree {

// Argument outside the mathematical domain of a function (z <= 0 for E1, negative SNR, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Vector lengths do not agree.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Scenario / RF parameters violating their invariants.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Root finder was handed an interval without a sign change.
class BracketError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Iterative method hit its iteration cap. Carries the best iterate found so far.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double best) : std::runtime_error(what), best_(best) {}
    double best_iterate() const noexcept { return best_; }

  private:
    double best_;
};

// Numerical optimizer failure (Newton breakdown, infeasible start, ...).
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// SCA started from a point that is not strictly feasible for the gain-maximization problem.
class InfeasibleStartError : public SolverError {
  public:
    using SolverError::SolverError;
};

// The channel has no usable link of the requested kind (e.g. g_hat == 0 for the BD corner).
class NoLinkError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace sree

#endif
