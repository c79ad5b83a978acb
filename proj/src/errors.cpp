/**************************************************************************
 * errors.cpp
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
#include <zetterberg/errors.hpp>

namespace zett {

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::SizeCapExceeded:
        return "SizeCapExceeded";
    case ErrorCode::DivisionByZero:
        return "DivisionByZero";
    case ErrorCode::EvenCharacteristic:
        return "EvenCharacteristic";
    case ErrorCode::PreconditionViolated:
        return "PreconditionViolated";
    case ErrorCode::FormulaMismatch:
        return "FormulaMismatch";
    case ErrorCode::NotFound:
        return "NotFound";
    case ErrorCode::HalfVariantNeedsOddQ0:
        return "HalfVariantNeedsOddQ0";
    case ErrorCode::LengthMismatch:
        return "LengthMismatch";
    case ErrorCode::Undecidable:
        return "Undecidable";
    case ErrorCode::Inconsistent:
        return "Inconsistent";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace zett
