/**************************************************************************
 * charsum.hpp
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
#include <zetterberg/poly.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace zett {

// Sum of chi(a2 x^2 + a1 x + a0) over the level, by direct summation.
// Throws FormulaMismatch when it disagrees with the closed form.
int quadratic_char_sum(const FieldContext& ctx, Level level, FieldElement a2, FieldElement a1,
                       FieldElement a0);

// -chi(a2) if a1^2 - 4 a0 a2 != 0, else (Q-1) chi(a2).
int quadratic_char_sum_closed_form(const FieldContext& ctx, Level level, FieldElement a2,
                                   FieldElement a1, FieldElement a0);

struct QuadraticSweep {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
};

// Every (a2 != 0, a1, a0) over the whole base arena, using lookup tables.
QuadraticSweep verify_quadratic_char_sums(const FieldContext& ctx);

// Roots of alpha X^2 + beta X + alpha^q in H (odd q): 0, 1 or 2.
int roots_in_H_count_odd(const FieldContext& ctx, FieldElement alpha, FieldElement beta);

// Trace of x from the arena down to F_p.
FieldElement absolute_trace(const FieldContext& ctx, FieldElement x);

// Whether x^2 + a x + b has a root in the arena (characteristic 2).
bool artin_schreier_solvable(const FieldContext& ctx, FieldElement a, FieldElement b);

// A root y of y^2 + y = t in the arena, if any (characteristic 2).
std::optional<FieldElement> solve_artin_schreier(const FieldContext& ctx, FieldElement t);

// Whether alpha X^2 + beta X + alpha^q has roots in H (even q, beta != 0).
bool roots_in_H_exist_even(const FieldContext& ctx, FieldElement alpha, FieldElement beta);

// Both roots in H when roots_in_H_exist_even holds.
std::optional<std::array<FieldElement, 2>> roots_in_H_even(const FieldContext& ctx, FieldElement alpha,
                                                           FieldElement beta);

struct QuarticPair {
    FieldElement c1;
    FieldElement c2;
    bool avoids_units = true; // c1, c2 outside {0, 1, -1}
};

// First (c1, c2) in row-major index order over F_q0^* with
// chi((c1+c2+1)(c1+c2-1)(c1-c2+1)(c1-c2-1)) = -1, preferring pairs that
// avoid +-1. Requires odd q0 >= 5.
QuarticPair find_nonsquare_quartic_pair(const FieldContext& ctx);

FieldElement quartic_delta(const FieldContext& ctx, FieldElement c1, FieldElement c2);

struct WeilFactor {
    Poly f;             // monic, coefficients in the level
    unsigned order = 2; // character order r, dividing |level| - 1
};

struct WeilReport {
    double sum_abs = 0;       // |sum|
    std::int64_t sum_real = 0; // exact value when every order is 2
    bool exact = false;
    int degree_sum = 0; // sum of radical degrees
    double bound = 0;
    double margin = 0; // bound - |sum|
    bool refined = false;
    bool violated = false;
};

// Direct evaluation of the multiplicative character sum and the bound.
// Throws PreconditionViolated for non-coprime inputs or all r-th powers.
WeilReport weil_bound_check(const FieldContext& ctx, Level level, const std::vector<WeilFactor>& factors);

struct WeilSuite {
    unsigned instances = 0;
    unsigned violations = 0;
    unsigned refined = 0;
    double min_margin = 0;
};

// Random factor lists of small degree; instances failing the precondition
// are redrawn.
WeilSuite weil_random_suite(const FieldContext& ctx, Level level, unsigned trials, std::uint64_t seed);

} // namespace zett
