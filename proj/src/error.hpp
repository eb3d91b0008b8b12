// Copyright 2026 catsense developers
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

namespace catsense {

enum class errc {
    invalid_argument,
    resource_limit,
    truncation_too_small,
    step_size_failure,
    degenerate_bias,
    no_interior_maximum,
    unsupported_shape,
    io_error,
};

/// Library-wide exception carrying a machine-readable error class.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string &what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

inline const char *errc_name(errc code) noexcept {
    switch (code) {
    case errc::invalid_argument:
        return "invalid_argument";
    case errc::resource_limit:
        return "resource_limit";
    case errc::truncation_too_small:
        return "truncation_too_small";
    case errc::step_size_failure:
        return "step_size_failure";
    case errc::degenerate_bias:
        return "degenerate_bias";
    case errc::no_interior_maximum:
        return "no_interior_maximum";
    case errc::unsupported_shape:
        return "unsupported_shape";
    case errc::io_error:
        return "io_error";
    }
    return "unknown";
}

} // namespace catsense
