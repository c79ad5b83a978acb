/**************************************************************************
 * test_tower.cpp
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

#include <zetterberg/errors.hpp>
#include <zetterberg/tower.hpp>

#include <doctest.h>

#include <map>
#include <set>

using namespace zett;

namespace {

oracle::NaiveField naive_of(const FieldContext& ctx)
{
    return oracle::NaiveField(ctx.characteristic(), ctx.spec().modulus);
}

// Tr via the sum of Frobenius conjugates, computed naively.
std::uint64_t naive_trace(const oracle::NaiveField& nf, std::uint64_t x, std::uint64_t small, unsigned k)
{
    std::uint64_t acc = 0, y = x;
    for (unsigned i = 0; i < k; ++i) {
        acc = nf.add(acc, y);
        y = nf.pow(y, small);
    }
    return acc;
}

std::uint64_t naive_norm(const oracle::NaiveField& nf, std::uint64_t x, std::uint64_t small, unsigned k)
{
    std::uint64_t acc = 1, y = x;
    for (unsigned i = 0; i < k; ++i) {
        acc = nf.mul(acc, y);
        y = nf.pow(y, small);
    }
    return acc;
}

} // namespace

TEST_CASE("trace and norm agree with conjugate sums and products")
{
    for (auto [p, m, s] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 2u}, {3u, 1u, 3u}}) {
        const auto ctx = make_field(p, m, s);
        const auto nf = naive_of(ctx);
        const std::uint64_t q0 = ctx.q0(), q = ctx.q();
        struct Case {
            LevelPair pair;
            std::uint64_t small;
            unsigned k;
        };
        for (Case c : {Case{{Level::Q2, Level::Q}, q, 2}, Case{{Level::Q, Level::Q0}, q0, s},
                       Case{{Level::Q2, Level::Q0}, q0, 2 * s}}) {
            for (std::uint64_t x = 0; x < ctx.order(); ++x) {
                const FieldElement e{x};
                if (!ctx.in_level(e, c.pair.from))
                    continue;
                const auto t = trace(ctx, e, c.pair);
                CHECK(t.index == naive_trace(nf, x, c.small, c.k));
                CHECK(ctx.in_level(t, c.pair.to));
                CHECK(norm(ctx, e, c.pair).index == naive_norm(nf, x, c.small, c.k));
            }
        }
    }
}

TEST_CASE("trace fibres are balanced and the trace map matches")
{
    const auto ctx = make_field(2, 1, 4); // F_256 over F_16 over F_2
    const TraceMap tm(ctx, {Level::Q, Level::Q0});
    std::map<std::uint64_t, int> fibre;
    for (const auto x : ctx.level_elements(Level::Q)) {
        const auto t = trace(ctx, x, {Level::Q, Level::Q0});
        CHECK(tm(x) == t);
        ++fibre[t.index];
    }
    CHECK(fibre.size() == 2);
    for (const auto& [k, v] : fibre)
        CHECK(v == 8);
    CHECK(trace(ctx, ctx.one(), {Level::Q, Level::Q0}) == ctx.zero()); // s = 4 is even
}

TEST_CASE("norm onto F_q is q+1 to one with kernel H")
{
    const auto ctx = make_field(3, 1, 2);
    std::map<std::uint64_t, int> fibre;
    for (std::uint64_t x = 1; x < ctx.order(); ++x) {
        const auto n = norm(ctx, FieldElement{x}, {Level::Q2, Level::Q});
        ++fibre[n.index];
        CHECK((n == ctx.one()) == ctx.in_subgroup(FieldElement{x}, Subgroup::H));
    }
    CHECK(fibre.size() == ctx.q() - 1);
    for (const auto& [k, v] : fibre)
        CHECK(v == static_cast<int>(ctx.q() + 1));
}

TEST_CASE("quadratic character by enumerated squares")
{
    const auto ctx13 = make_field(13, 1, 1);
    int sum = 0;
    std::set<std::uint64_t> sq;
    for (std::uint64_t y = 1; y < 13; ++y)
        sq.insert(y * y % 13);
    CHECK(sq == std::set<std::uint64_t>{1, 3, 4, 9, 10, 12});
    for (std::uint64_t x = 0; x < 13; ++x) {
        const int chi = quadratic_character(ctx13, ctx13.constant(static_cast<std::int64_t>(x)), Level::Q0);
        CHECK(chi == (x == 0 ? 0 : sq.count(x) ? 1 : -1));
        sum += chi;
    }
    CHECK(sum == 0);

    for (auto [p, m, s] : {std::tuple{3u, 1u, 2u}, {5u, 1u, 3u}, {3u, 2u, 1u}, {7u, 1u, 2u}}) {
        const auto ctx = make_field(p, m, s);
        const auto nf = naive_of(ctx);
        for (Level lv : {Level::Q0, Level::Q, Level::Q2}) {
            std::vector<std::uint64_t> elems;
            for (auto e : ctx.level_elements(lv))
                elems.push_back(e.index);
            const auto squares = oracle::squares_of(nf, elems);
            CHECK(squares.size() == (elems.size() - 1) / 2);
            const SquareSet ss(ctx, lv);
            for (auto x : elems) {
                const int want = x == 0 ? 0 : squares.count(x) ? 1 : -1;
                CHECK(quadratic_character(ctx, FieldElement{x}, lv) == want);
                CHECK(ss.chi(FieldElement{x}) == want);
            }
        }
    }
}

TEST_CASE("character is multiplicative and base squares stay squares for odd s")
{
    const auto ctx = make_field(5, 1, 3);
    const auto q0s = ctx.level_elements(Level::Q0);
    for (auto a : q0s)
        for (auto b : q0s)
            CHECK(quadratic_character(ctx, ctx.mul(a, b), Level::Q0) ==
                  quadratic_character(ctx, a, Level::Q0) * quadratic_character(ctx, b, Level::Q0));
    for (auto a : q0s)
        if (a != ctx.zero())
            CHECK(quadratic_character(ctx, a, Level::Q) == quadratic_character(ctx, a, Level::Q0));
    // even s: every element of F_q0 is a square in F_q
    const auto ctx2 = make_field(5, 1, 2);
    for (auto a : ctx2.level_elements(Level::Q0))
        if (a != ctx2.zero())
            CHECK(quadratic_character(ctx2, a, Level::Q) == 1);
}

TEST_CASE("character in even characteristic is rejected")
{
    const auto ctx = make_field(2, 1, 2);
    try {
        quadratic_character(ctx, ctx.one(), Level::Q);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvenCharacteristic);
    }
    CHECK_THROWS_AS(SquareSet(ctx, Level::Q), Error);
}

TEST_CASE("minus one lies in H")
{
    for (auto [p, m, s] : {std::tuple{3u, 1u, 1u}, {3u, 1u, 2u}, {5u, 1u, 1u}, {2u, 1u, 3u}}) {
        const auto ctx = make_field(p, m, s);
        CHECK(in_subgroup(ctx, ctx.constant(-1), Subgroup::H));
    }
    // order 2 divides q + 1
    const auto ctx = make_field(7, 1, 1);
    CHECK(ctx.pow(ctx.constant(-1), ctx.q() + 1) == ctx.one());
}

TEST_CASE("scaled H membership against the explicit set")
{
    for (auto [p, m, s] : {std::tuple{3u, 1u, 2u}, {2u, 1u, 3u}, {2u, 2u, 2u}, {5u, 1u, 2u}, {3u, 2u, 1u}}) {
        const auto ctx = make_field(p, m, s);
        const auto nf = naive_of(ctx);
        std::set<std::uint64_t> set{0};
        std::vector<std::uint64_t> h;
        for (std::uint64_t x = 1; x < nf.order(); ++x)
            if (nf.pow(x, ctx.q() + 1) == 1)
                h.push_back(x);
        for (auto c : ctx.level_elements(Level::Q0))
            if (c.index)
                for (auto y : h)
                    set.insert(nf.mul(c.index, y));
        for (std::uint64_t x = 0; x < ctx.order(); ++x) {
            const bool want = set.count(x) > 0;
            REQUIRE(in_scaled_H(ctx, FieldElement{x}) == want);
            const auto split = split_scaled_H(ctx, FieldElement{x});
            CHECK(split.has_value() == (want && x != 0));
            if (split) {
                CHECK(ctx.in_subgroup(split->h, Subgroup::H));
                CHECK(ctx.in_level(split->c, Level::Q0));
                CHECK(ctx.mul(split->c, split->h).index == x);
            }
        }
        if (p == 3 && s == 2)
            CHECK(set.size() == 11); // 2 * 10 / 2 + zero, since -1 is in H
    }
}
