/**************************************************************************
 * classify.hpp
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

#include <zetterberg/caps.hpp>
#include <zetterberg/code.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zett {

struct ClassificationReport {
    std::uint64_t q0 = 0;
    unsigned s = 0;
    Variant variant = Variant::Full;
    std::string length;    // decimal; may exceed 64 bits
    std::string dimension; // decimal
    std::optional<int> d;  // nullopt for the zero-dimensional code
    std::optional<int> rho;
    std::string rho_method;
    bool decided = false;
    bool perfect = false;
    bool quasi_perfect = false;
    bool maximal = false;
    std::string rule; // matching summary row, "derived", "trivial" or "open gap"
    std::string error; // set when the cell failed for a reason other than undecidability
};

// Verdicts follow from d and rho alone:
// perfect: rho = floor((d-1)/2); quasi-perfect: one more; maximal: rho <= d-1.
ClassificationReport classify(std::uint64_t q0, unsigned s, Variant variant, const Caps& caps = {});

// Cells that cannot be decided carry rule "open gap" instead of throwing.
std::vector<ClassificationReport> sweep(const std::vector<std::uint64_t>& q0s, unsigned s_min, unsigned s_max,
                                        Variant variant, const Caps& caps = {});

std::string classification_markdown(const std::vector<ClassificationReport>& rows);
std::string classification_csv(const std::vector<ClassificationReport>& rows);

} // namespace zett
