// Copyright 2026 The ssgsolve Authors
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

#ifndef SSG_ERRORS_HPP_
#define SSG_ERRORS_HPP_

#include <stdexcept>

namespace ssg {

/// Thrown when a request exceeds a configured size guard (e.g. too many
/// strategy pairs to enumerate, too many coin positions to solve).
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssg

#endif  // SSG_ERRORS_HPP_
