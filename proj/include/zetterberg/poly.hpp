/**************************************************************************
 * poly.hpp
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

#include <vector>

namespace zett {

// Dense univariate polynomial with coefficients in a FieldContext,
// ascending degree, no trailing zeros.
struct Poly {
    std::vector<FieldElement> c;

    Poly() = default;
    explicit Poly(std::vector<FieldElement> coeffs);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    FieldElement lead() const { return c.empty() ? FieldElement{} : c.back(); }

    friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_constant(FieldElement a);
Poly poly_x_minus(const FieldContext& ctx, FieldElement root);

FieldElement poly_eval(const FieldContext& ctx, const Poly& f, FieldElement x);
Poly poly_add(const FieldContext& ctx, const Poly& a, const Poly& b);
Poly poly_sub(const FieldContext& ctx, const Poly& a, const Poly& b);
Poly poly_mul(const FieldContext& ctx, const Poly& a, const Poly& b);
Poly poly_scale(const FieldContext& ctx, const Poly& a, FieldElement k);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

PolyDivision poly_divmod(const FieldContext& ctx, const Poly& a, const Poly& b);
Poly poly_monic(const FieldContext& ctx, const Poly& a);
Poly poly_gcd(const FieldContext& ctx, Poly a, Poly b); // monic, or zero
Poly poly_derivative(const FieldContext& ctx, const Poly& a);
// g with g^p == a; a must have support on multiples of p.
Poly poly_pth_root(const FieldContext& ctx, const Poly& a);

struct SquareFreePart {
    Poly factor; // squarefree, monic
    unsigned multiplicity;
};

// Monic input: a = product of factor^multiplicity over the result.
std::vector<SquareFreePart> squarefree_decomposition(const FieldContext& ctx, const Poly& a);

// Degree of the largest squarefree divisor.
int radical_degree(const FieldContext& ctx, const Poly& a);

// Whether a monic a equals g^r for some g (r coprime to p).
bool is_rth_power(const FieldContext& ctx, const Poly& a, unsigned r);

} // namespace zett
