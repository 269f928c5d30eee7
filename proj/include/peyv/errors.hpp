/*
 * Copyright 2026 The Peyv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace peyv {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or data-file rows (carries file:line where known).
class ParseError : public Error {
public:
  using Error::Error;
};

// Data that parses but violates an invariant (overlapping confusion groups,
// bad past stems, out-of-range parameters, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

// Filesystem and stream failures.
class IoError : public Error {
public:
  using Error::Error;
};

// Model files written by an incompatible version.
class VersionError : public IoError {
public:
  using IoError::IoError;
};

// Model files that fail the integrity check.
class CorruptModelError : public IoError {
public:
  using IoError::IoError;
};

} // namespace peyv
