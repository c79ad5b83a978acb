/**************************************************************************
 * test_charsum.cpp
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
#include "oracles.hpp"

#include <zetterberg/charsum.hpp>
#include <zetterberg/errors.hpp>
#include <zetterberg/tower.hpp>

#include <doctest.h>

#include <random>
#include <set>

using namespace zett;

namespace {

oracle::NaiveField naive_of(const FieldContext& ctx)
{
    return oracle::NaiveField(ctx.characteristic(), ctx.spec().modulus);
}

// chi over a level, from enumerated squares.
struct NaiveChi {
    std::set<std::uint64_t> sq;
    int operator()(std::uint64_t x) const { return x == 0 ? 0 : sq.count(x) ? 1 : -1; }
};

NaiveChi naive_chi(const FieldContext& ctx, Level lv)
{
    std::vector<std::uint64_t> e;
    for (auto x : ctx.level_elements(lv))
        e.push_back(x.index);
    return {oracle::squares_of(naive_of(ctx), e)};
}

} // namespace

TEST_CASE("quadratic character sums, spot values")
{
    const auto ctx = make_field(5, 1, 1);
    const auto c = [&](int v) { return ctx.constant(v); };
    CHECK(quadratic_char_sum(ctx, Level::Q0, c(1), c(0), c(0)) == 4);  // sum chi(x^2)
    CHECK(quadratic_char_sum(ctx, Level::Q0, c(1), c(0), c(1)) == -1); // x^2 + 1
    CHECK(quadratic_char_sum(ctx, Level::Q0, c(2), c(0), c(0)) == -4); // chi(2) = -1
    CHECK(quadratic_char_sum_closed_form(ctx, Level::Q0, c(2), c(4), c(2)) == -4); // 2 (x+1)^2
}

TEST_CASE("quadratic character sums match direct summation with enumerated squares")
{
    std::mt19937_64 rng(1);
    for (auto [p, m] : {std::pair{3u, 2u}, {7u, 1u}, {5u, 2u}, {3u, 3u}}) {
        const auto ctx = make_field(p, m, 1);
        const auto nf = naive_of(ctx);
        const auto chi = naive_chi(ctx, Level::Q);
        const auto elems = ctx.level_elements(Level::Q);
        for (int t = 0; t < 60; ++t) {
            FieldElement a2 = elems[1 + rng() % (elems.size() - 1)];
            FieldElement a1 = elems[rng() % elems.size()];
            FieldElement a0 = elems[rng() % elems.size()];
            if (t % 5 == 0) // force a zero discriminant: a2 (x + r)^2
                a0 = ctx.div(ctx.mul(a1, a1), ctx.mul(ctx.constant(4), a2));
            int want = 0;
            for (auto x : elems) {
                std::uint64_t v = nf.add(nf.mul(a2.index, nf.mul(x.index, x.index)), nf.mul(a1.index, x.index));
                want += chi(nf.add(v, a0.index));
            }
            CHECK(quadratic_char_sum(ctx, Level::Q, a2, a1, a0) == want);
            CHECK(quadratic_char_sum_closed_form(ctx, Level::Q, a2, a1, a0) == want);
        }
    }
}

TEST_CASE("full quadratic sweep on small fields")
{
    for (auto [p, m] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}, {11u, 1u}}) {
        const auto sw = verify_quadratic_char_sums(make_base_field(p, m, 1));
        const std::uint64_t Q = make_base_field(p, m, 1).order();
        CHECK(sw.checked == (Q - 1) * Q * Q);
        CHECK(sw.mismatches == 0);
    }
    CHECK_THROWS_AS(verify_quadratic_char_sums(make_base_field(2, 3, 1)), Error);
}

TEST_CASE("roots in H, odd q, against exhaustive root search")
{
    std::mt19937_64 rng(2);
    for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}, {7u, 1u}}) {
        const auto ctx = make_field(p, m, 1);
        const auto nf = naive_of(ctx);
        std::vector<std::uint64_t> h;
        for (std::uint64_t x = 1; x < nf.order(); ++x)
            if (nf.pow(x, ctx.q() + 1) == 1)
                h.push_back(x);
        const auto fq = ctx.level_elements(Level::Q);
        for (int t = 0; t < 150; ++t) {
            const FieldElement alpha{rng() % ctx.order()};
            const FieldElement beta = fq[rng() % fq.size()];
            if (alpha.index == 0 && beta.index == 0)
                continue;
            const std::uint64_t aq = nf.pow(alpha.index, ctx.q());
            int roots = 0;
            for (auto x : h) {
                std::uint64_t v = nf.add(nf.mul(alpha.index, nf.mul(x, x)), nf.mul(beta.index, x));
                roots += nf.add(v, aq) == 0;
            }
            CHECK(roots_in_H_count_odd(ctx, alpha, beta) == roots);
        }
    }
}

TEST_CASE("roots in H, even q, exhaustive over small fields")
{
    for (unsigned m : {2u, 3u, 4u}) {
        const auto ctx = make_field(2, m, 1);
        const auto nf = naive_of(ctx);
        std::vector<std::uint64_t> h;
        for (std::uint64_t x = 1; x < nf.order(); ++x)
            if (nf.pow(x, ctx.q() + 1) == 1)
                h.push_back(x);
        for (std::uint64_t a = 0; a < ctx.order(); ++a) {
            const std::uint64_t aq = nf.pow(a, ctx.q());
            for (auto beta : ctx.level_elements(Level::Q)) {
                if (beta.index == 0)
                    continue;
                std::vector<std::uint64_t> found;
                for (auto x : h)
                    if (nf.add(nf.add(nf.mul(a, nf.mul(x, x)), nf.mul(beta.index, x)), aq) == 0)
                        found.push_back(x);
                const bool exists = roots_in_H_exist_even(ctx, FieldElement{a}, beta);
                REQUIRE(exists == !found.empty());
                if (exists) {
                    CHECK(found.size() == 2);
                    const auto r = roots_in_H_even(ctx, FieldElement{a}, beta);
                    REQUIRE(r);
                    std::set<std::uint64_t> got{(*r)[0].index, (*r)[1].index};
                    CHECK(got == std::set<std::uint64_t>(found.begin(), found.end()));
                }
            }
        }
    }
}

TEST_CASE("Artin-Schreier solvability against exhaustive search")
{
    for (auto [m, s] : {std::pair{1u, 1u}, {1u, 3u}, {2u, 1u}, {3u, 1u}, {1u, 4u}}) {
        const auto ctx = make_field(2, m, s);
        const auto nf = naive_of(ctx);
        std::vector<char> hit(ctx.order(), 0);
        for (std::uint64_t y = 0; y < ctx.order(); ++y)
            hit[nf.add(nf.mul(y, y), y)] = 1;
        for (std::uint64_t t = 0; t < ctx.order(); ++t) {
            const auto y = solve_artin_schreier(ctx, FieldElement{t});
            REQUIRE(y.has_value() == static_cast<bool>(hit[t]));
            CHECK((absolute_trace(ctx, FieldElement{t}).index == 0) == static_cast<bool>(hit[t]));
        }
        std::mt19937_64 rng(m * 10 + s);
        for (int i = 0; i < 200; ++i) {
            const FieldElement a{1 + rng() % (ctx.order() - 1)}, b{rng() % ctx.order()};
            bool root = false;
            for (std::uint64_t x = 0; x < ctx.order() && !root; ++x)
                root = nf.add(nf.add(nf.mul(x, x), nf.mul(a.index, x)), b.index) == 0;
            CHECK(artin_schreier_solvable(ctx, a, b) == root);
        }
        // (a, a^2): x^2 + a x + a^2 has roots iff F_4 is inside, i.e. even degree
        const FieldElement a = ctx.generator();
        CHECK(artin_schreier_solvable(ctx, a, ctx.mul(a, a)) == (ctx.degree() % 2 == 0));
    }
    const auto odd = make_field(3, 1, 1);
    CHECK_THROWS_AS(solve_artin_schreier(odd, odd.one()), Error);
}

TEST_CASE("nonsquare quartic pair")
{
    for (std::uint64_t q0 : {5u, 7u, 9u, 11u, 13u, 25u, 27u, 49u, 121u, 169u}) {
        const auto pf = *prime_power_form(q0);
        const auto ctx = make_base_field(pf.p, pf.m, 1);
        const auto chi = naive_chi(ctx, Level::Q0);
        const auto pair = find_nonsquare_quartic_pair(ctx);
        CHECK(chi(quartic_delta(ctx, pair.c1, pair.c2).index) == -1);
        CHECK(pair.c1.index != 0);
        CHECK(pair.c2.index != 0);
        const auto one = ctx.one(), m1 = ctx.constant(-1);
        bool avoids = pair.c1 != one && pair.c1 != m1 && pair.c2 != one && pair.c2 != m1;
        CHECK(avoids == pair.avoids_units);
        CHECK(pair.avoids_units == (q0 != 5));
    }
    const auto f5 = make_base_field(5, 1, 1);
    const auto pair = find_nonsquare_quartic_pair(f5);
    CHECK(pair.c1 == f5.one());
    CHECK(pair.c2 == f5.one());
    CHECK_THROWS_AS(find_nonsquare_quartic_pair(make_base_field(3, 1, 1)), Error);
}

TEST_CASE("Weil bound, quadratic instances checked by direct summation")
{
    const auto ctx = make_base_field(3, 3, 1); // F_27
    const auto chi = naive_chi(ctx, Level::Q);
    auto lin = [&](std::int64_t r) { return poly_x_minus(ctx, ctx.constant(r)); };
    // x (x - 1) (x - 2) = x^3 - x
    const Poly cubic = poly_mul(ctx, lin(0), poly_mul(ctx, lin(1), lin(2)));
    const auto rep = weil_bound_check(ctx, Level::Q, {{cubic, 2}});
    int want = 0;
    for (auto x : ctx.level_elements(Level::Q))
        want += chi(poly_eval(ctx, cubic, x).index);
    CHECK(rep.exact);
    CHECK(rep.sum_real == want);
    CHECK(rep.degree_sum == 3);
    CHECK_FALSE(rep.violated);
    CHECK(rep.bound == doctest::Approx(2 * std::sqrt(27.0)));

    // x^2 is a square: precondition fails
    CHECK_THROWS_AS(weil_bound_check(ctx, Level::Q, {{poly_mul(ctx, lin(0), lin(0)), 2}}), Error);
    // not coprime
    CHECK_THROWS_AS(weil_bound_check(ctx, Level::Q, {{lin(1), 2}, {poly_mul(ctx, lin(1), lin(2)), 2}}), Error);
    // order must divide 26
    CHECK_THROWS_AS(weil_bound_check(ctx, Level::Q, {{lin(1), 3}}), Error);

    // refined case: one quadratic factor of even degree gives |S| <= 1
    const auto rep2 = weil_bound_check(ctx, Level::Q, {{poly_mul(ctx, lin(1), lin(2)), 2}});
    CHECK(rep2.refined);
    CHECK(std::abs(rep2.sum_real) == 1);
}

TEST_CASE("Weil random suites hold")
{
    for (auto [p, m] : {std::pair{3u, 2u}, {7u, 1u}, {13u, 1u}, {5u, 2u}}) {
        const auto ctx = make_base_field(p, m, 1);
        const auto suite = weil_random_suite(ctx, Level::Q, 150, p * 100 + m);
        CHECK(suite.instances == 150);
        CHECK(suite.violations == 0);
        CHECK(suite.min_margin >= -1e-9);
    }
}
