// Copyright 2026 The mubsic Authors
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

#ifndef MUBSIC_ERRORS_HPP
#define MUBSIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mubsic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension, or an index outside its range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The construction requires a prime (or odd prime) order.
class NotPrimeError : public Error {
 public:
  using Error::Error;
};

/// Input failed a structural check (non-Hermitian, non-finite, wrong trace, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A numerical verification exceeded its tolerance.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, double deviation)
      : Error(what), deviation_(deviation) {}
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

/// An iterative routine hit its iteration cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// File could not be read or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mubsic

#endif  // MUBSIC_ERRORS_HPP
