// Copyright 2026 The tsvlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tsvlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroStateError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/// The pre/post-selection pair is incompatible with measuring the observable
/// at this time: every outcome amplitude vanishes.
class NullEnsembleError : public Error {
 public:
  using Error::Error;
};

class TimeWindowError : public Error {
 public:
  using Error::Error;
};

/// Pre- and post-selected states are orthogonal, so a weak value is undefined.
class OrthogonalSelectionError : public Error {
 public:
  using Error::Error;
};

class NotMeasurableError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class SearchFailedError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tsvlab
