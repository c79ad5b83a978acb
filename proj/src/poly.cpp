/**************************************************************************
 * poly.cpp
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
#include <zetterberg/poly.hpp>

#include <algorithm>

namespace zett {

namespace {

void normalize(std::vector<FieldElement>& c)
{
    while (!c.empty() && c.back().index == 0)
        c.pop_back();
}

} // namespace

Poly::Poly(std::vector<FieldElement> coeffs) : c(std::move(coeffs)) { normalize(c); }

Poly poly_constant(FieldElement a) { return Poly({a}); }

Poly poly_x_minus(const FieldContext& ctx, FieldElement root) { return Poly({ctx.neg(root), ctx.one()}); }

FieldElement poly_eval(const FieldContext& ctx, const Poly& f, FieldElement x)
{
    FieldElement acc = ctx.zero();
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
        acc = ctx.add(ctx.mul(acc, x), *it);
    return acc;
}

Poly poly_add(const FieldContext& ctx, const Poly& a, const Poly& b)
{
    std::vector<FieldElement> r(std::max(a.c.size(), b.c.size()), ctx.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r[i] = ctx.add(r[i], b.c[i]);
    return Poly(std::move(r));
}

Poly poly_sub(const FieldContext& ctx, const Poly& a, const Poly& b)
{
    std::vector<FieldElement> r(std::max(a.c.size(), b.c.size()), ctx.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r[i] = ctx.sub(r[i], b.c[i]);
    return Poly(std::move(r));
}

Poly poly_mul(const FieldContext& ctx, const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<FieldElement> r(a.c.size() + b.c.size() - 1, ctx.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = ctx.add(r[i + j], ctx.mul(a.c[i], b.c[j]));
    return Poly(std::move(r));
}

Poly poly_scale(const FieldContext& ctx, const Poly& a, FieldElement k)
{
    std::vector<FieldElement> r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r[i] = ctx.mul(a.c[i], k);
    return Poly(std::move(r));
}

PolyDivision poly_divmod(const FieldContext& ctx, const Poly& a, const Poly& b)
{
    if (b.is_zero())
        raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<FieldElement> rem = a.c;
    const int db = b.degree();
    const int da = a.degree();
    std::vector<FieldElement> quo(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, ctx.zero());
    const FieldElement inv_lead = ctx.inv(b.lead());
    for (int k = da; k >= db; --k) {
        const FieldElement t = ctx.mul(rem[static_cast<std::size_t>(k)], inv_lead);
        if (t.index == 0)
            continue;
        quo[static_cast<std::size_t>(k - db)] = t;
        for (int i = 0; i <= db; ++i) {
            auto& slot = rem[static_cast<std::size_t>(k - db + i)];
            slot = ctx.sub(slot, ctx.mul(t, b.c[static_cast<std::size_t>(i)]));
        }
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_monic(const FieldContext& ctx, const Poly& a)
{
    if (a.is_zero())
        return a;
    return poly_scale(ctx, a, ctx.inv(a.lead()));
}

Poly poly_gcd(const FieldContext& ctx, Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = poly_divmod(ctx, a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(ctx, a);
}

Poly poly_derivative(const FieldContext& ctx, const Poly& a)
{
    if (a.c.size() <= 1)
        return {};
    std::vector<FieldElement> r(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r[i - 1] = ctx.mul(a.c[i], ctx.constant(static_cast<std::int64_t>(i)));
    return Poly(std::move(r));
}

Poly poly_pth_root(const FieldContext& ctx, const Poly& a)
{
    const std::uint32_t p = ctx.characteristic();
    std::vector<FieldElement> r;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i % p != 0) {
            require(a.c[i].index == 0, ErrorCode::PreconditionViolated,
                    "poly_pth_root: support off multiples of p");
            continue;
        }
        // x -> x^{1/p} is x -> x^{|arena|/p}.
        r.push_back(ctx.pow(a.c[i], ctx.order() / p));
    }
    return Poly(std::move(r));
}

std::vector<SquareFreePart> squarefree_decomposition(const FieldContext& ctx, const Poly& a)
{
    require(!a.is_zero() && a.lead() == ctx.one(), ErrorCode::PreconditionViolated,
            "squarefree_decomposition: input must be monic");
    std::vector<SquareFreePart> out;
    if (a.degree() == 0)
        return out;
    const std::uint32_t p = ctx.characteristic();
    Poly d = poly_derivative(ctx, a);
    Poly c;
    if (!d.is_zero()) {
        c = poly_gcd(ctx, a, d);
        Poly w = poly_divmod(ctx, a, c).quotient;
        unsigned i = 1;
        while (w.degree() > 0) {
            Poly y = poly_gcd(ctx, w, c);
            Poly fac = poly_divmod(ctx, w, y).quotient;
            if (fac.degree() > 0)
                out.push_back({poly_monic(ctx, fac), i});
            ++i;
            w = y;
            c = poly_divmod(ctx, c, y).quotient;
        }
    } else {
        c = a;
    }
    if (c.degree() > 0) {
        for (auto part : squarefree_decomposition(ctx, poly_pth_root(ctx, c))) {
            part.multiplicity *= p;
            out.push_back(std::move(part));
        }
    }
    return out;
}

int radical_degree(const FieldContext& ctx, const Poly& a)
{
    Poly m = poly_monic(ctx, a);
    // A factor of multiplicity kp + j lands in two blocks; dedupe by gcd.
    Poly rad = poly_constant(ctx.one());
    for (const auto& part : squarefree_decomposition(ctx, m)) {
        Poly g = poly_gcd(ctx, rad, part.factor);
        rad = poly_mul(ctx, rad, poly_divmod(ctx, part.factor, g).quotient);
    }
    return rad.degree();
}

bool is_rth_power(const FieldContext& ctx, const Poly& a, unsigned r)
{
    require(r >= 1, ErrorCode::InvalidArgument, "is_rth_power: r must be positive");
    require(!a.is_zero() && a.lead() == ctx.one(), ErrorCode::PreconditionViolated,
            "is_rth_power: input must be monic");
    // Collect the exact multiplicity of every squarefree block.
    std::vector<SquareFreePart> parts = squarefree_decomposition(ctx, a);
    // Split blocks until pairwise coprime, summing shared multiplicities.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < parts.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < parts.size() && !changed; ++j) {
                Poly g = poly_gcd(ctx, parts[i].factor, parts[j].factor);
                if (g.degree() <= 0)
                    continue;
                SquareFreePart a_rest{poly_divmod(ctx, parts[i].factor, g).quotient, parts[i].multiplicity};
                SquareFreePart b_rest{poly_divmod(ctx, parts[j].factor, g).quotient, parts[j].multiplicity};
                SquareFreePart common{g, parts[i].multiplicity + parts[j].multiplicity};
                parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
                parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
                for (auto* part : {&a_rest, &b_rest, &common})
                    if (part->factor.degree() > 0)
                        parts.push_back(*part);
                changed = true;
            }
        }
    }
    return std::all_of(parts.begin(), parts.end(), [&](const SquareFreePart& part) {
        return part.multiplicity % r == 0;
    });
}

} // namespace zett
