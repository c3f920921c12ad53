// Copyright 2026 The Arcwise Authors
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

#ifndef ARCWISE_ERROR_HPP
#define ARCWISE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcwise {

// Values mirror the ARCW_E_* codes of the C API.
enum class ErrorCode {
    InvalidArgument = 1,
    Parse = 2,
    Overlap = 3,
    NotALoop = 4,
    EndpointMismatch = 5,
    NotCollapsible = 6,
    NotAChain = 7,
    PremiseFailed = 8,
    IsLoop = 9,
    PathMismatch = 10,
    OffGrid = 11,
    Internal = 12,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library. `first` and `second` carry the
// indices named by the error (e.g. the two overlapping intervals); unused
// slots hold npos.
class Error : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Error(ErrorCode code, const std::string& message,
          std::size_t first = npos, std::size_t second = npos)
        : std::runtime_error(message), code_(code), first_(first), second_(second) {}

    ErrorCode code() const noexcept { return code_; }
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    ErrorCode code_;
    std::size_t first_;
    std::size_t second_;
};

} // namespace arcwise

#endif // ARCWISE_ERROR_HPP
