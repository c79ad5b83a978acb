/**************************************************************************
 * serialize.hpp
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

#include <zetterberg/classify.hpp>
#include <zetterberg/code.hpp>
#include <zetterberg/gf.hpp>
#include <zetterberg/radius.hpp>
#include <zetterberg/thresholds.hpp>

#include <string>
#include <vector>

namespace zett {

// All emitters produce compact, key-ordered JSON text. Field elements are
// arrays of ascending polynomial-basis digits.

// {p, m, s, modulus, generator, subgroup_orders}; dump adds degree, orders
// and the factorization of the multiplicative group order.
std::string field_json(const FieldContext& ctx, bool dump = false);

// {q0, s, variant, support, coeffs}; coeffs lists the nonzero entries.
std::string codeword_json(const ZetterbergCode& code, const Codeword& word);

// {q0, s, rho, method, witness, witness_level, cross_checks, elapsed_ms};
// elapsed_ms is omitted when timing is off.
std::string radius_json(const RadiusReport& report, bool timing = true);

std::string classification_json(const std::vector<ClassificationReport>& rows);

std::string thresholds_json(Parity parity, std::uint64_t q0_max);

struct DistanceSummary {
    std::uint64_t q0 = 0;
    unsigned s = 0;
    Variant variant = Variant::Full;
    std::optional<int> formula;
    bool searched = false;
    std::optional<int> exhaustive;
    bool agree = true;
    std::string witness_json; // codeword JSON, empty when absent
};

std::string distance_json(const DistanceSummary& d);

} // namespace zett
