// Copyright 2026 The adidas-nfg Authors.
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

#ifndef ADIDAS_BASE_H_
#define ADIDAS_BASE_H_

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace adidas {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// One vector per player; used for payoff gradients, auxiliary estimates and
// ADI gradients alike.
using PlayerVectors = std::vector<Vector>;

// Strategies must sum to one within this tolerance.
inline constexpr double kSimplexTolerance = 1e-9;
// Inputs within this distance of the simplex are renormalized on
// construction; anything further away is rejected.
inline constexpr double kRenormalizeTolerance = 1e-6;

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of games, strategies or estimates disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value violates a documented precondition (negative temperature,
// strategy off the simplex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation produced a non-finite value.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration or input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

inline bool AllFinite(const Vector& v) { return v.allFinite(); }

inline Vector Uniform(int m) { return Vector::Constant(m, 1.0 / m); }

}  // namespace adidas

#endif  // ADIDAS_BASE_H_
