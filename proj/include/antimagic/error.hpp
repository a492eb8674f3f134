// Copyright 2026 The Antimagic Authors
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

namespace antimagic {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A labeling is not a bijection onto its declared window, or does not
/// cover the graph's edge ids.
class MalformedLabeling : public Error {
 public:
  using Error::Error;
};

/// An algorithm's input precondition is violated (e.g. an Euler tour was
/// requested on a multigraph with an odd-degree vertex).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The instance does not satisfy the hypotheses of the requested
/// construction. `hypothesis()` names the one that failed.
class RejectedInstance : public Error {
 public:
  explicit RejectedInstance(std::string hypothesis)
      : Error("rejected instance: " + hypothesis), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A construction produced output that the verifier refused. Constructions
/// are proved correct, so this is always a defect.
class ConstructionBug : public Error {
 public:
  using Error::Error;
};

/// No strategy applies to the instance and every fallback is exhausted.
class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its declared size limit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace antimagic
