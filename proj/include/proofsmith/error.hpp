// Copyright 2026 The Proofsmith Authors.
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

#ifndef PROOFSMITH_ERROR_HPP_
#define PROOFSMITH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace proofsmith {

// Root of every error thrown by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Backend could not be reached (after retries) or a capability is missing.
class OracleUnavailable : public Error {
 public:
  using Error::Error;
};

// Backend answered, but the reply does not match the wire schema.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class CompositionFailed : public Error {
 public:
  using Error::Error;
};

class EmptyKb : public Error {
 public:
  using Error::Error;
};

class AllFactsDiscarded : public Error {
 public:
  using Error::Error;
};

// An export asked for more examples than the pool holds.
class Shortfall : public Error {
 public:
  using Error::Error;
};

}  // namespace proofsmith

#endif  // PROOFSMITH_ERROR_HPP_
