/**************************************************************************
 * code.hpp
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

#include <zetterberg/gf.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace zett {

enum class Variant { Full, Half };

const char* variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name);

// Coefficients lie in F_q0, embedded in the code's arena.
struct Codeword {
    std::vector<FieldElement> coeffs;

    std::vector<std::size_t> support() const;
    std::size_t weight() const;
};

class ZetterbergCode {
public:
    // Needs the ambient arena; Half needs odd q0.
    ZetterbergCode(FieldContext ctx, Variant variant);

    const FieldContext& ctx() const { return ctx_; }
    Variant variant() const { return variant_; }
    std::uint64_t q0() const { return ctx_.q0(); }
    std::uint64_t q() const { return ctx_.q(); }
    unsigned s() const { return ctx_.spec().s; }
    std::size_t length() const { return positions_.size(); }
    std::size_t dimension() const { return positions_.size() - 2 * s(); }
    FieldElement xi() const { return xi_; }
    FieldElement position(std::size_t i) const { return positions_[i]; }
    const std::vector<FieldElement>& positions() const { return positions_; }

    // Index i with xi^k == sign * xi^i, folded into [0, length).
    struct Folded {
        std::size_t index;
        bool negated;
    };
    Folded fold(std::uint64_t k) const;

private:
    FieldContext ctx_;
    Variant variant_;
    FieldElement xi_;
    std::vector<FieldElement> positions_;
};

ZetterbergCode build_code(std::uint64_t q0, unsigned s, Variant variant, const Caps& caps = {});

FieldElement syndrome(const ZetterbergCode& code, const Codeword& word);
bool contains(const ZetterbergCode& code, const Codeword& word);

// Shift by one position: cyclic for Full, negacyclic for Half.
Codeword shift_codeword(const ZetterbergCode& code, const Codeword& word);

// Row-major matrix with entries in F_q0.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FieldElement> a;

    FieldElement& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    FieldElement at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// F_q0 coordinates of y in the basis 1, g, ..., g^{2s-1} of F_q^2.
std::vector<FieldElement> q0_coordinates(const FieldContext& ctx, FieldElement y);

// 2s x length; column i holds the coordinates of xi^i.
Matrix parity_check_matrix(const ZetterbergCode& code);
std::size_t rank_over_q0(const FieldContext& ctx, Matrix m);
std::vector<std::vector<FieldElement>> kernel_basis(const FieldContext& ctx, Matrix m);

// nullopt for the zero-dimensional half code at q0 = 3, s = 1.
std::optional<int> min_distance_formula(std::uint64_t q0, unsigned s, Variant variant);

struct DistanceSearch {
    std::optional<int> distance; // nullopt: no nonzero word up to max_weight
    Codeword witness;
};

DistanceSearch min_distance_exhaustive(const ZetterbergCode& code, int max_weight);

struct Weight3Witness {
    Codeword word;
    bool constructed = true; // false when the direct scan supplied it
};

// Even q0 >= 4, odd s, full code; theta generates the order q0+1 subgroup.
Weight3Witness weight3_witness_even(const ZetterbergCode& code, unsigned i = 1, unsigned j = 2);

// Odd q0 >= 5, odd s, half code.
Weight3Witness weight3_witness_half_odd(const ZetterbergCode& code);

} // namespace zett
