/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The zetterberg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include <stdexcept>
#include <string>

namespace zett {

enum class ErrorCode {
    InvalidArgument,
    SizeCapExceeded,
    DivisionByZero,
    EvenCharacteristic,
    PreconditionViolated,
    FormulaMismatch,
    NotFound,
    HalfVariantNeedsOddQ0,
    LengthMismatch,
    Undecidable,
    Inconsistent,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

inline void require(bool ok, ErrorCode code, const char* what)
{
    if (!ok)
        raise(code, what);
}

} // namespace zett
