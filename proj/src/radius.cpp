/**************************************************************************
 * radius.cpp
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
#include <zetterberg/radius.hpp>
#include <zetterberg/thresholds.hpp>
#include <zetterberg/tower.hpp>

#include <algorithm>
#include <chrono>
#include <limits>

namespace zett {

namespace {

using u64 = std::uint64_t;
constexpr std::uint8_t kUnseen = 0xFF;

// Digitwise addition of packed indices. The ambient index splits as
// lo + q * hi with both halves below q, and addition never carries
// across digits, so one q x q table serves both halves.
class PackedAdder {
public:
    explicit PackedAdder(const FieldContext& ctx) : q_(ctx.q()), binary_(ctx.characteristic() == 2)
    {
        if (binary_)
            return;
        const u64 p = ctx.characteristic();
        table_.resize(q_ * q_);
        for (u64 a = 0; a < q_; ++a) {
            for (u64 b = 0; b < q_; ++b) {
                u64 x = a, y = b, out = 0, w = 1;
                while (x || y) {
                    out += ((x % p + y % p) % p) * w;
                    x /= p;
                    y /= p;
                    w *= p;
                }
                table_[a * q_ + b] = static_cast<std::uint32_t>(out);
            }
        }
    }

    u64 operator()(u64 u, u64 t) const
    {
        if (binary_)
            return u ^ t;
        const u64 lo = table_[(u % q_) * q_ + t % q_];
        const u64 hi = table_[(u / q_) * q_ + t / q_];
        return lo + q_ * hi;
    }

private:
    u64 q_;
    bool binary_;
    std::vector<std::uint32_t> table_;
};

void check_oracle_size(const FieldContext& ctx)
{
    require(ctx.arena() == Arena::Ambient, ErrorCode::InvalidArgument, "the oracle needs the ambient arena");
    require(ctx.order() <= ctx.caps().oracle_cap, ErrorCode::SizeCapExceeded,
            "oracle: q^2 exceeds the configured oracle cap");
}

OracleLayers bfs(const FieldContext& ctx, std::vector<u64> steps)
{
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    const PackedAdder add(ctx);
    const u64 P = ctx.order();

    OracleLayers out;
    out.layer.assign(P, kUnseen);
    out.layer[0] = 0;
    out.layer_sizes.push_back(1);
    std::vector<u64> frontier{0}, next;
    u64 unseen = P - 1;
    unsigned k = 0;
    while (unseen > 0 && !frontier.empty()) {
        require(k + 1 < kUnseen, ErrorCode::FormulaMismatch, "oracle: too many layers");
        const auto here = static_cast<std::uint8_t>(k);
        const auto there = static_cast<std::uint8_t>(k + 1);
        next.clear();
        if (unseen < frontier.size()) {
            // Bottom-up: the step set is closed under negation.
            for (u64 u = 1; u < P; ++u) {
                if (out.layer[u] != kUnseen)
                    continue;
                for (u64 t : steps) {
                    if (out.layer[add(u, t)] <= here) {
                        out.layer[u] = there;
                        next.push_back(u);
                        break;
                    }
                }
            }
        } else {
            for (u64 f : frontier) {
                for (u64 t : steps) {
                    const u64 v = add(f, t);
                    if (out.layer[v] == kUnseen) {
                        out.layer[v] = there;
                        next.push_back(v);
                    }
                }
            }
        }
        if (next.empty())
            break;
        unseen -= next.size();
        out.layer_sizes.push_back(next.size());
        std::swap(frontier, next);
        ++k;
    }
    require(unseen == 0, ErrorCode::FormulaMismatch, "oracle: step set does not span the syndrome space");
    out.rho = static_cast<int>(k);
    out.deepest = FieldElement{*std::min_element(frontier.begin(), frontier.end())};
    return out;
}

std::vector<u64> scaled_steps(const FieldContext& ctx, u64 count)
{
    std::vector<u64> steps;
    const FieldElement xi = ctx.xi();
    std::vector<FieldElement> units;
    for (FieldElement c : ctx.level_elements(Level::Q0))
        if (c.index != 0)
            units.push_back(c);
    FieldElement x = ctx.one();
    for (u64 i = 0; i < count; ++i) {
        for (FieldElement c : units)
            steps.push_back(ctx.mul(c, x).index);
        x = ctx.mul(x, xi);
    }
    return steps;
}

FieldContext base_of(const FieldContext& ctx)
{
    if (ctx.arena() == Arena::Base)
        return ctx;
    const FieldSpec& sp = ctx.spec();
    return make_base_field(sp.p, sp.m, sp.s, ctx.caps());
}

// x - beta by adjusting only the digits where beta is nonzero.
struct DigitShift {
    std::vector<std::pair<u64, u64>> terms; // (p^i, digit of beta)

    u64 subtract_from(u64 x, u64 p) const
    {
        for (const auto& [w, d] : terms) {
            const u64 xd = (x / w) % p;
            const u64 nd = (xd + p - d) % p;
            x = x - xd * w + nd * w;
        }
        return x;
    }
};

struct OddScan {
    FieldContext base;
    SquareSet squares_q;
    SquareSet squares_q0;
    std::vector<DigitShift> betas;
    u64 p;

    explicit OddScan(const FieldContext& ctx)
        : base(base_of(ctx)), squares_q(base, Level::Q), squares_q0(base, Level::Q0), p(base.characteristic())
    {
        for (FieldElement c : base.level_elements(Level::Q0)) {
            if (!squares_q0.contains(c))
                continue;
            DigitShift shift;
            auto digits = base.coeffs(c);
            u64 w = 1;
            for (auto d : digits) {
                if (d)
                    shift.terms.push_back({w, d});
                w *= p;
            }
            betas.push_back(std::move(shift));
        }
    }

    // True when x is a witness; counts one evaluation per beta tried.
    bool qualifies(u64 x, u64& evaluations) const
    {
        if (squares_q0.contains(FieldElement{x}))
            return false;
        const int cx = squares_q.chi(FieldElement{x});
        for (const DigitShift& b : betas) {
            ++evaluations;
            if (squares_q.chi(FieldElement{b.subtract_from(x, p)}) != cx)
                return false;
        }
        return true;
    }
};

void check_odd_criterion(const FieldContext& ctx)
{
    require(ctx.characteristic() != 2, ErrorCode::PreconditionViolated, "odd criterion needs odd q0");
    require(ctx.spec().s >= 2, ErrorCode::PreconditionViolated, "criterion needs s >= 2");
}

void charge(u64 evaluations, const Caps& caps)
{
    if (evaluations > caps.scan_cap)
        raise(ErrorCode::SizeCapExceeded, "criterion scan exceeds the configured scan cap");
}

std::optional<u64> checked_pow(u64 base, unsigned e)
{
    u64 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > std::numeric_limits<u64>::max() / base)
            return std::nullopt;
        r *= base;
    }
    return r;
}

PrimePowerForm checked_q0(u64 q0, unsigned s)
{
    auto form = prime_power_form(q0);
    require(form.has_value(), ErrorCode::InvalidArgument, "q0 must be a prime power");
    require(s >= 1, ErrorCode::InvalidArgument, "s must be positive");
    return *form;
}

std::vector<std::uint32_t> digits_of(const FieldContext& ctx, FieldElement x) { return ctx.coeffs(x); }

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

OracleLayers oracle_layers(const FieldContext& ctx)
{
    check_oracle_size(ctx);
    return bfs(ctx, scaled_steps(ctx, ctx.q() + 1));
}

OracleLayers oracle_layers_half(const FieldContext& ctx)
{
    check_oracle_size(ctx);
    if (ctx.characteristic() == 2)
        raise(ErrorCode::HalfVariantNeedsOddQ0, "the half code needs odd q0");
    return bfs(ctx, scaled_steps(ctx, (ctx.q() + 1) / 2));
}

CriterionResult rho_criterion_odd(const FieldContext& ctx)
{
    check_odd_criterion(ctx);
    require(ctx.q() <= ctx.caps().scan_cap, ErrorCode::SizeCapExceeded,
            "criterion scan exceeds the configured scan cap");
    const OddScan scan(ctx);
    CriterionResult r;
    r.rho = 2;
    for (u64 x = 1; x < scan.base.order(); ++x) {
        const bool hit = scan.qualifies(x, r.evaluations);
        charge(r.evaluations, ctx.caps());
        if (hit) {
            r.rho = 3;
            r.witness = FieldElement{x};
            break;
        }
    }
    return r;
}

std::uint64_t witness_count_odd(const FieldContext& ctx)
{
    check_odd_criterion(ctx);
    require(ctx.spec().s % 2 == 1, ErrorCode::PreconditionViolated, "witness count needs odd s");
    require(ctx.q() <= ctx.caps().scan_cap, ErrorCode::SizeCapExceeded,
            "criterion scan exceeds the configured scan cap");
    const OddScan scan(ctx);
    u64 evaluations = 0, count = 0;
    for (u64 x = 1; x < scan.base.order(); ++x) {
        if (scan.qualifies(x, evaluations))
            ++count;
        charge(evaluations, ctx.caps());
    }
    return count;
}

CriterionResult rho_criterion_even(const FieldContext& ctx)
{
    require(ctx.characteristic() == 2, ErrorCode::PreconditionViolated, "even criterion needs even q0");
    require(ctx.spec().s >= 2, ErrorCode::PreconditionViolated, "criterion needs s >= 2");
    const u64 budget = ctx.q() * ctx.q0() * ctx.spec().s;
    require(budget / ctx.q0() / ctx.spec().s == ctx.q() && budget <= ctx.caps().scan_cap,
            ErrorCode::SizeCapExceeded, "criterion scan exceeds the configured scan cap");
    const FieldContext base = base_of(ctx);
    const TraceMap tr(base, {Level::Q, Level::Q0});
    std::vector<bool> in_q0(base.order(), false);
    std::vector<FieldElement> units;
    for (FieldElement c : base.level_elements(Level::Q0)) {
        in_q0[c.index] = true;
        if (c.index != 0)
            units.push_back(c);
    }
    CriterionResult r;
    r.rho = 2;
    for (u64 a = 2; a < base.order(); ++a) {
        if (in_q0[a] || tr(FieldElement{a}).index != 0)
            continue;
        bool ok = true;
        for (FieldElement b : units) {
            ++r.evaluations;
            // 1 + b alpha; nonzero because alpha is outside F_q0.
            const FieldElement v{base.mul(b, FieldElement{a}).index ^ 1};
            if (tr(base.inv(v)).index > 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            r.rho = 3;
            r.witness = FieldElement{a};
            break;
        }
    }
    return r;
}

std::optional<Shortcut> rho_shortcuts(std::uint64_t q0, unsigned s)
{
    const auto form = checked_q0(q0, s);
    const auto divisor_rule = [&]() -> std::optional<Shortcut> {
        for (unsigned d = 3; d < s; d += 2) {
            if (s % d)
                continue;
            auto sub = rho_shortcuts(q0, d);
            if (sub && sub->rho == 3)
                return Shortcut{3, "divisor s'=" + std::to_string(d)};
        }
        return std::nullopt;
    };
    if (form.p == 2) {
        if (s == 1)
            return Shortcut{1, "s=1"};
        if (s == 2)
            return Shortcut{2, "s=2"};
        if (s % 2 == 0)
            return Shortcut{3, "even s>=4"};
        if (2 * static_cast<u64>(s) <= q0)
            return Shortcut{2, "odd s<=q0/2"};
        if (s >= s_star_upper_even(q0))
            return Shortcut{3, "s>=s_*"};
        return divisor_rule();
    }
    if (s == 1)
        return Shortcut{2, "s=1"};
    if (q0 == 3)
        return Shortcut{3, "q0=3"};
    if (s % 2 == 0)
        return Shortcut{3, "even s>=2"};
    if (sodd_holds(q0, s))
        return Shortcut{2, "odd s<=s^*"};
    if (s >= s_star_upper_odd(q0))
        return Shortcut{3, "s>=s_*"};
    return divisor_rule();
}

const char* strategy_name(Strategy s) noexcept
{
    switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Oracle: return "oracle";
    case Strategy::Criterion: return "criterion";
    case Strategy::Shortcut: return "shortcut";
    case Strategy::Verify: return "verify";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name)
{
    for (Strategy s : {Strategy::Auto, Strategy::Oracle, Strategy::Criterion, Strategy::Shortcut, Strategy::Verify})
        if (name == strategy_name(s))
            return s;
    return std::nullopt;
}

namespace {

struct Attempt {
    int rho = 0;
    std::string method;
    std::optional<std::vector<std::uint32_t>> witness;
    std::string witness_level;
};

std::optional<Attempt> try_shortcut(u64 q0, unsigned s)
{
    auto sc = rho_shortcuts(q0, s);
    if (!sc)
        return std::nullopt;
    return Attempt{sc->rho, "shortcut:" + sc->rule, std::nullopt, ""};
}

Attempt run_criterion(u64 q0, unsigned s, const Caps& caps, unsigned modulus_rank = 0)
{
    const auto form = checked_q0(q0, s);
    require(s >= 2, ErrorCode::PreconditionViolated, "criterion needs s >= 2");
    const auto q = checked_pow(q0, s);
    require(q && *q <= caps.max_ambient_order && *q <= caps.scan_cap, ErrorCode::SizeCapExceeded,
            "criterion: F_q exceeds the configured caps");
    FieldContext base = make_base_field(form.p, form.m, s, caps);
    if (modulus_rank)
        base = remake_with_modulus_rank(base, modulus_rank);
    const CriterionResult c = form.p == 2 ? rho_criterion_even(base) : rho_criterion_odd(base);
    Attempt a{c.rho, modulus_rank ? "criterion:alt-modulus" : "criterion", std::nullopt, ""};
    if (c.witness) {
        a.witness = digits_of(base, *c.witness);
        a.witness_level = "q";
    }
    return a;
}

Attempt run_oracle(u64 q0, unsigned s, const Caps& caps)
{
    const auto form = checked_q0(q0, s);
    const auto q = checked_pow(q0, s);
    require(q && *q <= (u64{1} << 31) && *q * *q <= caps.oracle_cap, ErrorCode::SizeCapExceeded,
            "oracle: q^2 exceeds the configured oracle cap");
    const FieldContext ctx = make_field(form.p, form.m, s, caps);
    const OracleLayers layers = oracle_layers(ctx);
    return Attempt{layers.rho, "oracle", digits_of(ctx, layers.deepest), "q2"};
}

template <class F>
std::optional<Attempt> feasible(F&& f)
{
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SizeCapExceeded)
            return std::nullopt;
        throw;
    }
}

} // namespace

RadiusReport covering_radius_oracle(std::uint64_t q0, unsigned s, const Caps& caps)
{
    return covering_radius(q0, s, Strategy::Oracle, caps);
}

RadiusReport covering_radius(std::uint64_t q0, unsigned s, Strategy strategy, const Caps& caps)
{
    const auto t0 = std::chrono::steady_clock::now();
    checked_q0(q0, s);
    std::vector<Attempt> done;
    switch (strategy) {
    case Strategy::Shortcut: {
        auto a = try_shortcut(q0, s);
        if (!a)
            raise(ErrorCode::Undecidable, "no shortcut rule decides this (q0, s)");
        done.push_back(*a);
        break;
    }
    case Strategy::Criterion:
        done.push_back(run_criterion(q0, s, caps));
        break;
    case Strategy::Oracle:
        done.push_back(run_oracle(q0, s, caps));
        break;
    case Strategy::Auto: {
        std::optional<Attempt> a = try_shortcut(q0, s);
        if (!a && s >= 2)
            a = feasible([&] { return run_criterion(q0, s, caps); });
        if (!a)
            a = feasible([&] { return run_oracle(q0, s, caps); });
        if (!a)
            raise(ErrorCode::Undecidable, "no method decides this (q0, s) within the configured caps");
        done.push_back(*a);
        break;
    }
    case Strategy::Verify: {
        if (auto a = try_shortcut(q0, s))
            done.push_back(*a);
        if (s >= 2) {
            if (auto a = feasible([&] { return run_criterion(q0, s, caps); })) {
                done.push_back(*a);
                // Same decision under a different irreducible modulus, when one exists.
                try {
                    if (auto b = feasible([&] { return run_criterion(q0, s, caps, 1); }))
                        done.push_back(*b);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::NotFound)
                        throw;
                }
            }
        }
        if (auto a = feasible([&] { return run_oracle(q0, s, caps); }))
            done.push_back(*a);
        if (done.empty())
            raise(ErrorCode::Undecidable, "no method decides this (q0, s) within the configured caps");
        break;
    }
    }

    RadiusReport r;
    r.q0 = q0;
    r.s = s;
    for (const Attempt& a : done)
        r.cross_checks.push_back({a.method, a.rho});
    for (const Attempt& a : done) {
        if (a.rho != done.front().rho) {
            std::string msg = "methods disagree:";
            for (const Attempt& b : done)
                msg += " " + b.method + "=" + std::to_string(b.rho);
            raise(ErrorCode::Inconsistent, msg);
        }
    }
    // Report the most direct method that ran, with its witness when it has one.
    const auto rank = [](const Attempt& a) {
        if (a.method == "oracle")
            return 3;
        if (a.method == "criterion")
            return 2;
        return a.method.rfind("shortcut", 0) == 0 ? 1 : 0;
    };
    const Attempt* lead = &done.front();
    for (const Attempt& a : done)
        if (rank(a) > rank(*lead))
            lead = &a;
    r.rho = lead->rho;
    r.method = lead->method;
    if (lead->witness) {
        r.witness = lead->witness;
        r.witness_level = lead->witness_level;
    } else {
        for (const Attempt& a : done) {
            if (a.witness && a.method != "criterion:alt-modulus") {
                r.witness = a.witness;
                r.witness_level = a.witness_level;
                break;
            }
        }
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

HalfFullCheck half_full_radius_equality_check(std::uint64_t q0, unsigned s, const Caps& caps)
{
    const auto form = checked_q0(q0, s);
    if (form.p == 2)
        raise(ErrorCode::HalfVariantNeedsOddQ0, "the half code needs odd q0");
    const auto q = checked_pow(q0, s);
    require(q && *q <= (u64{1} << 31) && *q * *q <= caps.oracle_cap, ErrorCode::SizeCapExceeded,
            "oracle: q^2 exceeds the configured oracle cap");
    const FieldContext ctx = make_field(form.p, form.m, s, caps);
    HalfFullCheck out;
    out.full_rho = oracle_layers(ctx).rho;
    out.half_rho = oracle_layers_half(ctx).rho;
    out.equal = out.full_rho == out.half_rho;
    return out;
}

} // namespace zett
