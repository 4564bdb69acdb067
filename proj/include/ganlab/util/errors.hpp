// Copyright 2026 The scf-ganlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ganlab {

// Every failure surfaced by the library is one of four kinds; the CLI maps
// each kind to a fixed process exit code.
enum class ErrorKind { Config, Data, Numeric, Io };

constexpr int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return 2;
    case ErrorKind::Data: return 3;
    case ErrorKind::Numeric: return 4;
    case ErrorKind::Io: return 5;
  }
  return 1;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

// Matrix/layer dimensions disagree.
class ShapeError : public DataError {
  using DataError::DataError;
};

// Train-mode batch normalization over fewer than two rows.
class BatchTooSmallError : public DataError {
  using DataError::DataError;
};

// Probability arguments outside the open interval a log-likelihood needs.
class DomainError : public NumericError {
  using NumericError::NumericError;
};

class SchemaError : public DataError {
  using DataError::DataError;
};

class ParseError : public DataError {
  using DataError::DataError;
};

class StateError : public DataError {
  using DataError::DataError;
};

class StratificationError : public DataError {
  using DataError::DataError;
};

class DegenerateDataError : public DataError {
  using DataError::DataError;
};

class ContractError : public DataError {
  using DataError::DataError;
};

// A persisted model does not fit the data it is being applied to.
class BindError : public DataError {
  using DataError::DataError;
};

class BundleError : public IoError {
  using IoError::IoError;
};

class NotABundleError : public BundleError {
  using BundleError::BundleError;
};

class VersionMismatchError : public BundleError {
  using BundleError::BundleError;
};

class TruncatedBundleError : public BundleError {
  using BundleError::BundleError;
};

class ChecksumError : public BundleError {
  using BundleError::BundleError;
};

}  // namespace ganlab
