/**************************************************************************
 * charsum.cpp
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
#include <zetterberg/charsum.hpp>
#include <zetterberg/errors.hpp>
#include <zetterberg/tower.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

namespace zett {

namespace {

void require_odd(const FieldContext& ctx, const char* what)
{
    if (ctx.characteristic() == 2)
        raise(ErrorCode::EvenCharacteristic, what);
}

void require_even(const FieldContext& ctx, const char* what)
{
    require(ctx.characteristic() == 2, ErrorCode::PreconditionViolated, what);
}

FieldElement trace_to_prime(const FieldContext& ctx, FieldElement x, unsigned degree)
{
    FieldElement acc = ctx.zero();
    for (unsigned i = 0; i < degree; ++i) {
        acc = ctx.add(acc, x);
        x = ctx.pow(x, ctx.characteristic());
    }
    return acc;
}

// Gaussian elimination over F_2 for the linear map y -> y^2 + y.
std::optional<FieldElement> solve_as_linear(const FieldContext& ctx, FieldElement t)
{
    const unsigned n = ctx.degree();
    // Row i of the augmented system: bit j is coefficient of y_j; bit 64 via rhs.
    std::vector<std::uint64_t> cols(n);
    for (unsigned j = 0; j < n; ++j) {
        FieldElement e{std::uint64_t{1} << j};
        cols[j] = ctx.add(ctx.mul(e, e), e).index;
    }
    std::vector<std::uint64_t> rows(n, 0);
    std::vector<unsigned> rhs(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            if ((cols[j] >> i) & 1)
                rows[i] |= std::uint64_t{1} << j;
        rhs[i] = (t.index >> i) & 1;
    }
    std::vector<int> pivot_row_of_col(n, -1);
    unsigned r = 0;
    for (unsigned c = 0; c < n && r < n; ++c) {
        unsigned pr = r;
        while (pr < n && !((rows[pr] >> c) & 1))
            ++pr;
        if (pr == n)
            continue;
        std::swap(rows[pr], rows[r]);
        std::swap(rhs[pr], rhs[r]);
        for (unsigned i = 0; i < n; ++i) {
            if (i != r && ((rows[i] >> c) & 1)) {
                rows[i] ^= rows[r];
                rhs[i] ^= rhs[r];
            }
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (unsigned i = r; i < n; ++i)
        if (rhs[i])
            return std::nullopt;
    std::uint64_t y = 0;
    for (unsigned c = 0; c < n; ++c)
        if (pivot_row_of_col[c] >= 0 && rhs[static_cast<unsigned>(pivot_row_of_col[c])])
            y |= std::uint64_t{1} << c;
    return FieldElement{y};
}

std::uint64_t level_log(const FieldContext& ctx, FieldElement x, Level level)
{
    const std::uint64_t e = (ctx.order() - 1) / (ctx.level_order(level) - 1);
    return ctx.log(x) / e;
}

} // namespace

int quadratic_char_sum_closed_form(const FieldContext& ctx, Level level, FieldElement a2, FieldElement a1,
                                   FieldElement a0)
{
    require_odd(ctx, "quadratic_char_sum: odd characteristic only");
    require(a2.index != 0, ErrorCode::PreconditionViolated, "quadratic_char_sum: a2 must be nonzero");
    const FieldElement d = ctx.sub(ctx.mul(a1, a1), ctx.mul(ctx.constant(4), ctx.mul(a0, a2)));
    const int chi_a2 = quadratic_character(ctx, a2, level);
    if (d.index != 0)
        return -chi_a2;
    return static_cast<int>(ctx.level_order(level) - 1) * chi_a2;
}

int quadratic_char_sum(const FieldContext& ctx, Level level, FieldElement a2, FieldElement a1, FieldElement a0)
{
    const int expected = quadratic_char_sum_closed_form(ctx, level, a2, a1, a0);
    for (FieldElement a : {a1, a0})
        require(ctx.in_level(a, level), ErrorCode::PreconditionViolated,
                "quadratic_char_sum: coefficient outside the level");
    int sum = 0;
    for (FieldElement x : ctx.level_elements(level)) {
        FieldElement v = ctx.add(ctx.mul(ctx.add(ctx.mul(a2, x), a1), x), a0);
        sum += quadratic_character(ctx, v, level);
    }
    if (sum != expected)
        raise(ErrorCode::FormulaMismatch, "quadratic_char_sum: direct sum " + std::to_string(sum) +
                                              " != closed form " + std::to_string(expected));
    return sum;
}

QuadraticSweep verify_quadratic_char_sums(const FieldContext& ctx)
{
    require_odd(ctx, "verify_quadratic_char_sums: odd characteristic only");
    require(ctx.order() <= 4096, ErrorCode::SizeCapExceeded, "verify_quadratic_char_sums: field too large");
    const std::size_t Q = static_cast<std::size_t>(ctx.order());
    std::vector<std::uint16_t> add(Q * Q), mul(Q * Q);
    for (std::size_t a = 0; a < Q; ++a) {
        for (std::size_t b = 0; b < Q; ++b) {
            add[a * Q + b] = static_cast<std::uint16_t>(ctx.add(FieldElement{a}, FieldElement{b}).index);
            mul[a * Q + b] = static_cast<std::uint16_t>(ctx.mul(FieldElement{a}, FieldElement{b}).index);
        }
    }
    const SquareSet squares(ctx, ctx.top_level());
    std::vector<std::int8_t> chi(Q);
    for (std::size_t v = 0; v < Q; ++v)
        chi[v] = static_cast<std::int8_t>(squares.chi(FieldElement{v}));
    // shifted[a0 * Q + v] = chi(v + a0)
    std::vector<std::int8_t> shifted(Q * Q);
    for (std::size_t a0 = 0; a0 < Q; ++a0)
        for (std::size_t v = 0; v < Q; ++v)
            shifted[a0 * Q + v] = chi[add[v * Q + a0]];
    const std::size_t four = ctx.constant(4).index;
    std::vector<std::uint16_t> w(Q);
    QuadraticSweep out;
    for (std::size_t a2 = 1; a2 < Q; ++a2) {
        const int chi_a2 = chi[a2];
        const std::size_t four_a2 = mul[four * Q + a2];
        for (std::size_t a1 = 0; a1 < Q; ++a1) {
            for (std::size_t x = 0; x < Q; ++x)
                w[x] = add[mul[a2 * Q + mul[x * Q + x]] * Q + mul[a1 * Q + x]];
            const std::size_t a1sq = mul[a1 * Q + a1];
            for (std::size_t a0 = 0; a0 < Q; ++a0) {
                const std::int8_t* row = shifted.data() + a0 * Q;
                int sum = 0;
                for (std::size_t x = 0; x < Q; ++x)
                    sum += row[w[x]];
                const bool d_zero = a1sq == mul[four_a2 * Q + a0];
                const int expected = d_zero ? static_cast<int>(Q - 1) * chi_a2 : -chi_a2;
                ++out.checked;
                if (sum != expected)
                    ++out.mismatches;
            }
        }
    }
    return out;
}

int roots_in_H_count_odd(const FieldContext& ctx, FieldElement alpha, FieldElement beta)
{
    require_odd(ctx, "roots_in_H_count_odd: odd q only");
    require(ctx.arena() == Arena::Ambient, ErrorCode::PreconditionViolated, "roots_in_H_count_odd: needs F_q^2");
    require(ctx.in_level(beta, Level::Q), ErrorCode::PreconditionViolated, "roots_in_H_count_odd: beta not in F_q");
    require(alpha.index != 0 || beta.index != 0, ErrorCode::PreconditionViolated,
            "roots_in_H_count_odd: alpha and beta both zero");
    const FieldElement n = norm(ctx, alpha, {Level::Q2, Level::Q});
    const FieldElement delta = ctx.sub(ctx.mul(beta, beta), ctx.mul(ctx.constant(4), n));
    if (delta.index == 0)
        return 1;
    return 1 - quadratic_character(ctx, delta, Level::Q);
}

FieldElement absolute_trace(const FieldContext& ctx, FieldElement x)
{
    return trace_to_prime(ctx, x, ctx.degree());
}

bool artin_schreier_solvable(const FieldContext& ctx, FieldElement a, FieldElement b)
{
    require_even(ctx, "artin_schreier_solvable: characteristic 2 only");
    if (a.index == 0)
        raise(ErrorCode::DivisionByZero, "artin_schreier_solvable: a must be nonzero");
    return absolute_trace(ctx, ctx.div(b, ctx.mul(a, a))).index == 0;
}

std::optional<FieldElement> solve_artin_schreier(const FieldContext& ctx, FieldElement t)
{
    require_even(ctx, "solve_artin_schreier: characteristic 2 only");
    if (absolute_trace(ctx, t).index != 0)
        return std::nullopt;
    const unsigned n = ctx.degree();
    std::optional<FieldElement> y;
    if (n % 2 == 1) {
        // Half-trace: sum of t^{2^{2i}} for i <= (n-1)/2.
        FieldElement acc = ctx.zero();
        FieldElement u = t;
        for (unsigned i = 0; i <= (n - 1) / 2; ++i) {
            acc = ctx.add(acc, u);
            u = ctx.pow(u, 4);
        }
        y = acc;
    } else {
        y = solve_as_linear(ctx, t);
    }
    require(y.has_value() && ctx.add(ctx.mul(*y, *y), *y) == t, ErrorCode::FormulaMismatch,
            "solve_artin_schreier: solution check failed");
    return y;
}

bool roots_in_H_exist_even(const FieldContext& ctx, FieldElement alpha, FieldElement beta)
{
    require_even(ctx, "roots_in_H_exist_even: even q only");
    require(ctx.arena() == Arena::Ambient, ErrorCode::PreconditionViolated, "roots_in_H_exist_even: needs F_q^2");
    require(beta.index != 0 && ctx.in_level(beta, Level::Q), ErrorCode::PreconditionViolated,
            "roots_in_H_exist_even: beta must lie in F_q^*");
    if (alpha.index == 0)
        return false;
    const FieldElement n = norm(ctx, alpha, {Level::Q2, Level::Q});
    const FieldElement t = ctx.div(n, ctx.mul(beta, beta));
    return trace_to_prime(ctx, t, ctx.spec().s * ctx.spec().m) == ctx.one();
}

std::optional<std::array<FieldElement, 2>> roots_in_H_even(const FieldContext& ctx, FieldElement alpha,
                                                           FieldElement beta)
{
    if (!roots_in_H_exist_even(ctx, alpha, beta))
        return std::nullopt;
    // Monic form X^2 + a X + b, then X = a Y gives Y^2 + Y = b / a^2.
    const FieldElement a = ctx.div(beta, alpha);
    const FieldElement b = ctx.div(ctx.conjugate(alpha), alpha);
    auto y = solve_artin_schreier(ctx, ctx.div(b, ctx.mul(a, a)));
    require(y.has_value(), ErrorCode::FormulaMismatch, "roots_in_H_even: trace test and solver disagree");
    std::array<FieldElement, 2> roots{ctx.mul(a, *y), ctx.mul(a, ctx.add(*y, ctx.one()))};
    for (FieldElement r : roots) {
        const FieldElement v = ctx.add(ctx.add(ctx.mul(alpha, ctx.mul(r, r)), ctx.mul(beta, r)), ctx.conjugate(alpha));
        require(v.index == 0 && ctx.in_subgroup(r, Subgroup::H), ErrorCode::FormulaMismatch,
                "roots_in_H_even: extracted root is not a root in H");
    }
    return roots;
}

FieldElement quartic_delta(const FieldContext& ctx, FieldElement c1, FieldElement c2)
{
    const FieldElement one = ctx.one();
    const FieldElement s = ctx.add(c1, c2);
    const FieldElement d = ctx.sub(c1, c2);
    return ctx.mul(ctx.mul(ctx.add(s, one), ctx.sub(s, one)), ctx.mul(ctx.add(d, one), ctx.sub(d, one)));
}

QuarticPair find_nonsquare_quartic_pair(const FieldContext& ctx)
{
    require_odd(ctx, "find_nonsquare_quartic_pair: odd q0 only");
    if (ctx.q0() < 5)
        raise(ErrorCode::NotFound, "find_nonsquare_quartic_pair: needs q0 >= 5");
    std::vector<FieldElement> units;
    for (FieldElement c : ctx.level_elements(Level::Q0))
        if (c.index != 0)
            units.push_back(c);
    const FieldElement one = ctx.one();
    const FieldElement minus_one = ctx.neg(one);
    for (bool avoid : {true, false}) {
        for (FieldElement c1 : units) {
            for (FieldElement c2 : units) {
                if (avoid && (c1 == one || c1 == minus_one || c2 == one || c2 == minus_one))
                    continue;
                if (quadratic_character(ctx, quartic_delta(ctx, c1, c2), Level::Q0) == -1)
                    return {c1, c2, avoid};
            }
        }
    }
    raise(ErrorCode::NotFound, "find_nonsquare_quartic_pair: no pair found");
}

WeilReport weil_bound_check(const FieldContext& ctx, Level level, const std::vector<WeilFactor>& factors)
{
    require_odd(ctx, "weil_bound_check: odd characteristic only");
    require(!factors.empty(), ErrorCode::PreconditionViolated, "weil_bound_check: no factors");
    const std::uint64_t Q = ctx.level_order(level);
    bool some_non_power = false;
    unsigned lcm = 1;
    WeilReport rep;
    bool all_quadratic_even = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& wf = factors[i];
        require(!wf.f.is_zero() && wf.f.lead() == ctx.one(), ErrorCode::PreconditionViolated,
                "weil_bound_check: factors must be monic");
        for (FieldElement c : wf.f.c)
            require(ctx.in_level(c, level), ErrorCode::PreconditionViolated,
                    "weil_bound_check: coefficient outside the level");
        require(wf.order >= 2 && (Q - 1) % wf.order == 0, ErrorCode::PreconditionViolated,
                "weil_bound_check: character order must divide |level| - 1");
        for (std::size_t j = 0; j < i; ++j)
            require(poly_gcd(ctx, wf.f, factors[j].f).degree() == 0, ErrorCode::PreconditionViolated,
                    "weil_bound_check: factors are not pairwise coprime");
        if (!is_rth_power(ctx, wf.f, wf.order))
            some_non_power = true;
        const int d = radical_degree(ctx, wf.f);
        rep.degree_sum += d;
        if (wf.order != 2 || d % 2 != 0)
            all_quadratic_even = false;
        lcm = std::lcm(lcm, wf.order);
    }
    require(some_non_power, ErrorCode::PreconditionViolated, "weil_bound_check: every factor is an r-th power");

    std::vector<std::uint64_t> counts(lcm, 0);
    for (FieldElement c : ctx.level_elements(level)) {
        std::uint64_t residue = 0;
        bool zero = false;
        for (const auto& wf : factors) {
            const FieldElement v = poly_eval(ctx, wf.f, c);
            if (v.index == 0) {
                zero = true;
                break;
            }
            residue += (level_log(ctx, v, level) % wf.order) * (lcm / wf.order);
        }
        if (!zero)
            ++counts[residue % lcm];
    }

    const double sqrt_q = std::sqrt(static_cast<double>(Q));
    const int D = rep.degree_sum;
    rep.refined = all_quadratic_even;
    rep.bound = rep.refined ? 1.0 + (D - 2) * sqrt_q : (D - 1) * sqrt_q;
    rep.exact = lcm == 2;
    if (rep.exact) {
        const std::int64_t S = static_cast<std::int64_t>(counts[0]) - static_cast<std::int64_t>(counts[1]);
        rep.sum_real = S;
        rep.sum_abs = static_cast<double>(S < 0 ? -S : S);
        // Exact squared comparison against the bound.
        __extension__ using i128 = __int128;
        const i128 a = S < 0 ? -S : S;
        const i128 q = static_cast<i128>(Q);
        if (rep.refined) {
            const i128 k = D - 2;
            rep.violated = k < 0 ? a > 1 : (a > 1 && (a - 1) * (a - 1) > k * k * q);
        } else {
            const i128 k = D - 1;
            rep.violated = k < 0 ? a > 0 : a * a > k * k * q;
        }
    } else {
        std::complex<double> sum = 0;
        for (unsigned j = 0; j < lcm; ++j)
            sum += static_cast<double>(counts[j]) * std::polar(1.0, 2.0 * std::numbers::pi * j / lcm);
        rep.sum_abs = std::abs(sum);
        rep.violated = rep.sum_abs > rep.bound + 1e-9 * (1.0 + rep.bound);
    }
    rep.margin = rep.bound - rep.sum_abs;
    return rep;
}

WeilSuite weil_random_suite(const FieldContext& ctx, Level level, unsigned trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto elems = ctx.level_elements(level);
    const std::uint64_t Q = ctx.level_order(level);
    std::vector<unsigned> orders;
    for (unsigned r = 2; r <= 12 && r < Q; ++r)
        if ((Q - 1) % r == 0)
            orders.push_back(r);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    WeilSuite suite;
    suite.min_margin = INFINITY;
    while (suite.instances < trials) {
        std::vector<WeilFactor> factors(1 + pick(3));
        for (auto& wf : factors) {
            const std::size_t deg = 1 + pick(3);
            std::vector<FieldElement> c(deg + 1);
            for (std::size_t i = 0; i < deg; ++i)
                c[i] = elems[pick(elems.size())];
            c[deg] = ctx.one();
            wf.f = Poly(std::move(c));
            // Mostly quadratic characters, sometimes higher order.
            wf.order = pick(4) == 0 ? orders[pick(orders.size())] : 2;
        }
        WeilReport rep;
        try {
            rep = weil_bound_check(ctx, level, factors);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::PreconditionViolated)
                continue;
            throw;
        }
        ++suite.instances;
        if (rep.violated)
            ++suite.violations;
        if (rep.refined)
            ++suite.refined;
        suite.min_margin = std::min(suite.min_margin, rep.margin);
    }
    return suite;
}

} // namespace zett
