// Copyright 2026 The nkstar Authors
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

#ifndef NKSTAR_ERRORS_HPP
#define NKSTAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nkstar {

/// Raised when arguments fall outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a result that must hold by construction fails validation.
/// Seeing one of these means there is a bug in this library.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace nkstar

#endif  // NKSTAR_ERRORS_HPP
