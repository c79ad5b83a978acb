/**************************************************************************
 * tower.cpp
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
#include <zetterberg/tower.hpp>

namespace zett {

namespace {

void check_pair(const FieldContext& ctx, LevelPair pair)
{
    require(ctx.has_level(pair.from) && ctx.has_level(pair.to), ErrorCode::InvalidArgument,
            "level pair names a level absent from this arena");
    require(level_degree(ctx, pair.from) % level_degree(ctx, pair.to) == 0 &&
                level_degree(ctx, pair.to) <= level_degree(ctx, pair.from),
            ErrorCode::InvalidArgument, "level pair: target must be a subfield of the source");
}

} // namespace

unsigned level_degree(const FieldContext& ctx, Level level)
{
    const auto& sp = ctx.spec();
    switch (level) {
    case Level::Q0:
        return sp.m;
    case Level::Q:
        return sp.m * sp.s;
    case Level::Q2:
        require(ctx.arena() == Arena::Ambient, ErrorCode::InvalidArgument, "level q2 needs the ambient arena");
        return 2 * sp.m * sp.s;
    }
    return 0;
}

FieldElement trace(const FieldContext& ctx, FieldElement x, LevelPair pair)
{
    check_pair(ctx, pair);
    const unsigned k = level_degree(ctx, pair.from) / level_degree(ctx, pair.to);
    const std::uint64_t step = ctx.level_order(pair.to);
    FieldElement acc = ctx.zero();
    FieldElement y = x;
    for (unsigned i = 0; i < k; ++i) {
        acc = ctx.add(acc, y);
        y = ctx.pow(y, step);
    }
    return acc;
}

FieldElement norm(const FieldContext& ctx, FieldElement x, LevelPair pair)
{
    check_pair(ctx, pair);
    const unsigned k = level_degree(ctx, pair.from) / level_degree(ctx, pair.to);
    const std::uint64_t step = ctx.level_order(pair.to);
    FieldElement acc = ctx.one();
    FieldElement y = x;
    for (unsigned i = 0; i < k; ++i) {
        acc = ctx.mul(acc, y);
        y = ctx.pow(y, step);
    }
    return acc;
}

int quadratic_character(const FieldContext& ctx, FieldElement x, Level level)
{
    if (ctx.characteristic() == 2)
        raise(ErrorCode::EvenCharacteristic, "quadratic character needs odd characteristic");
    require(ctx.in_level(x, level), ErrorCode::PreconditionViolated,
            "quadratic_character: element is outside the named subfield");
    if (x.index == 0)
        return 0;
    const std::uint64_t sub = ctx.level_order(level) - 1;
    if (ctx.has_log_table()) {
        const std::uint64_t e = (ctx.order() - 1) / sub;
        return (ctx.log(x) / e) % 2 == 0 ? 1 : -1;
    }
    FieldElement r = ctx.pow(x, sub / 2);
    if (r == ctx.one())
        return 1;
    require(r == ctx.neg(ctx.one()), ErrorCode::FormulaMismatch, "Euler criterion produced neither 1 nor -1");
    return -1;
}

bool in_scaled_H(const FieldContext& ctx, FieldElement y)
{
    if (y.index == 0)
        return true;
    const FieldElement n = norm(ctx, y, {Level::Q2, Level::Q});
    if (!ctx.in_level(n, Level::Q0))
        return false;
    if (ctx.characteristic() == 2)
        return true;
    return quadratic_character(ctx, n, Level::Q0) == 1;
}

std::optional<ScaledHSplit> split_scaled_H(const FieldContext& ctx, FieldElement y)
{
    if (y.index == 0 || !in_scaled_H(ctx, y))
        return std::nullopt;
    const FieldElement n = norm(ctx, y, {Level::Q2, Level::Q});
    auto c = ctx.sqrt(n);
    require(c.has_value() && ctx.in_level(*c, Level::Q0), ErrorCode::FormulaMismatch,
            "split_scaled_H: norm root left F_q0");
    ScaledHSplit out{*c, ctx.div(y, *c)};
    require(ctx.in_subgroup(out.h, Subgroup::H), ErrorCode::FormulaMismatch,
            "split_scaled_H: cofactor is not in H");
    return out;
}

TraceMap::TraceMap(const FieldContext& ctx, LevelPair pair)
    : map_(LinearMap::from_function(ctx, [&](FieldElement b) { return trace(ctx, b, pair); }))
{
}

SquareSet::SquareSet(const FieldContext& ctx, Level level)
{
    if (ctx.characteristic() == 2)
        raise(ErrorCode::EvenCharacteristic, "square bitset: every element is a square in characteristic 2");
    require(ctx.order() <= (std::uint64_t{1} << 31), ErrorCode::SizeCapExceeded,
            "square bitset: arena too large");
    bits_.assign(static_cast<std::size_t>((ctx.order() + 63) / 64), 0);
    const std::uint64_t half = (ctx.level_order(level) - 1) / 2;
    const FieldElement h = ctx.level_generator(level);
    const FieldElement h2 = ctx.mul(h, h);
    auto set = [&](FieldElement x) { bits_[x.index >> 6] |= std::uint64_t{1} << (x.index & 63); };
    if (ctx.characteristic() == 2) {
        // Every nonzero element is a square.
        FieldElement x = ctx.one();
        for (std::uint64_t k = 0; k + 1 < ctx.level_order(level); ++k) {
            set(x);
            x = ctx.mul(x, h);
        }
        return;
    }
    if (ctx.has_log_table()) {
        const std::uint64_t e = 2 * ((ctx.order() - 1) / (ctx.level_order(level) - 1));
        for (std::uint64_t k = 0; k < half; ++k)
            set(ctx.exp(k * e));
        return;
    }
    const LinearMap step = LinearMap::multiplication_by(ctx, h2);
    FieldElement x = ctx.one();
    for (std::uint64_t k = 0; k < half; ++k) {
        set(x);
        x = step.apply(x);
    }
}

} // namespace zett
