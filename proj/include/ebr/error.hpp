// Copyright 2026 The EBR Authors
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

namespace ebr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension is out of range or two operands disagree on it.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A ket is not unit-normalized.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// A measurement basis is not orthonormal.
class BasisError : public Error {
 public:
  using Error::Error;
};

/// A point is off the affine hull of a simplex, or outside it where the
/// operation requires an interior point.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument (partition, probability vector, ...) does not
/// hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The brute-force membership oracle found a point claimed by no region, or
/// strictly inside two regions at once.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input. The message carries the byte offset.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that fails validation. field() names the offending
/// entry, e.g. "state.ket".
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace ebr
