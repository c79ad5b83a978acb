/**************************************************************************
 * code.cpp
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
#include <zetterberg/code.hpp>
#include <zetterberg/errors.hpp>
#include <zetterberg/tower.hpp>

#include <algorithm>
#include <unordered_map>

namespace zett {

namespace {

using u64 = std::uint64_t;

// Exponent k in [0, q+1) with xi^k == h, for h in H.
u64 h_exponent(const ZetterbergCode& code, FieldElement h)
{
    const FieldContext& ctx = code.ctx();
    if (ctx.has_log_table())
        return ctx.log(h) / (ctx.q() - 1);
    auto k = ctx.discrete_log(code.xi(), h, ctx.q() + 1);
    require(k.has_value(), ErrorCode::FormulaMismatch, "element expected in H");
    return *k;
}

// Solves B e = y over F_p where B's columns are omega^j g^k, the F_p-basis
// behind the F_q0-basis 1, g, ..., g^{2s-1}.
class CoordinateSolver {
public:
    explicit CoordinateSolver(const FieldContext& ctx) : ctx_(ctx), n_(ctx.degree()), p_(ctx.characteristic())
    {
        const unsigned m = ctx.spec().m;
        const unsigned dims = n_ / m;
        omega_pows_.resize(m);
        const FieldElement omega = ctx.level_generator(Level::Q0);
        FieldElement w = ctx.one();
        for (unsigned j = 0; j < m; ++j) {
            omega_pows_[j] = w;
            w = ctx.mul(w, omega);
        }
        // Column (k * m + j) is omega^j g^k.
        std::vector<std::vector<u64>> aug(n_, std::vector<u64>(2 * n_, 0));
        FieldElement gk = ctx.one();
        for (unsigned k = 0; k < dims; ++k) {
            for (unsigned j = 0; j < m; ++j) {
                auto d = ctx.coeffs(ctx.mul(omega_pows_[j], gk));
                for (unsigned r = 0; r < n_; ++r)
                    aug[r][k * m + j] = d[r];
            }
            gk = ctx.mul(gk, ctx.generator());
        }
        for (unsigned r = 0; r < n_; ++r)
            aug[r][n_ + r] = 1;
        for (unsigned c = 0; c < n_; ++c) {
            unsigned pr = c;
            while (pr < n_ && aug[pr][c] == 0)
                ++pr;
            require(pr < n_, ErrorCode::FormulaMismatch, "coordinate basis is singular");
            std::swap(aug[pr], aug[c]);
            const u64 inv = inverse_mod_p(aug[c][c]);
            for (auto& v : aug[c])
                v = v * inv % p_;
            for (unsigned r = 0; r < n_; ++r) {
                if (r == c || aug[r][c] == 0)
                    continue;
                const u64 f = aug[r][c];
                for (unsigned t = 0; t < 2 * n_; ++t)
                    aug[r][t] = (aug[r][t] + (p_ - f) * aug[c][t]) % p_;
            }
        }
        inverse_.resize(static_cast<std::size_t>(n_) * n_);
        for (unsigned r = 0; r < n_; ++r)
            for (unsigned c = 0; c < n_; ++c)
                inverse_[r * n_ + c] = aug[r][n_ + c];
    }

    std::vector<FieldElement> operator()(FieldElement y) const
    {
        const unsigned m = ctx_.spec().m;
        const unsigned dims = n_ / m;
        auto d = ctx_.coeffs(y);
        std::vector<FieldElement> out(dims, ctx_.zero());
        for (unsigned k = 0; k < dims; ++k) {
            for (unsigned j = 0; j < m; ++j) {
                const unsigned r = k * m + j;
                u64 e = 0;
                for (unsigned c = 0; c < n_; ++c)
                    e += inverse_[r * n_ + c] * d[c];
                out[k] = ctx_.add(out[k], ctx_.scale(omega_pows_[j], static_cast<std::int64_t>(e % p_)));
            }
        }
        return out;
    }

private:
    u64 inverse_mod_p(u64 a) const
    {
        u64 r = 1, e = p_ - 2;
        a %= p_;
        while (e) {
            if (e & 1)
                r = r * a % p_;
            a = a * a % p_;
            e >>= 1;
        }
        return r;
    }

    const FieldContext& ctx_;
    unsigned n_;
    u64 p_;
    std::vector<FieldElement> omega_pows_;
    std::vector<u64> inverse_;
};

Codeword make_word(std::size_t length, const std::vector<std::pair<std::size_t, FieldElement>>& entries)
{
    Codeword w;
    w.coeffs.assign(length, FieldElement{0});
    for (const auto& [i, c] : entries)
        w.coeffs[i] = c;
    return w;
}

std::vector<FieldElement> q0_units(const FieldContext& ctx)
{
    std::vector<FieldElement> out;
    for (FieldElement c : ctx.level_elements(Level::Q0))
        if (c.index != 0)
            out.push_back(c);
    return out;
}

std::optional<Codeword> search_weight2(const ZetterbergCode& code)
{
    const FieldContext& ctx = code.ctx();
    for (std::size_t j = 1; j < code.length(); ++j) {
        const FieldElement x = code.position(j);
        if (ctx.in_level(x, Level::Q0)) {
            // 1 + c xi^j = 0
            return make_word(code.length(), {{0, ctx.one()}, {j, ctx.neg(ctx.inv(x))}});
        }
    }
    return std::nullopt;
}

std::optional<Codeword> search_weight3(const ZetterbergCode& code)
{
    const FieldContext& ctx = code.ctx();
    require(code.q() <= ctx.caps().weight3_q_cap, ErrorCode::SizeCapExceeded,
            "weight-3 search: q exceeds the configured cap");
    const auto units = q0_units(ctx);
    const u64 q1 = code.q() + 1;
    for (std::size_t j = 1; j < code.length(); ++j) {
        for (FieldElement c : units) {
            const FieldElement y = ctx.neg(ctx.add(ctx.one(), ctx.mul(c, code.position(j))));
            if (y.index == 0 || !in_scaled_H(ctx, y))
                continue;
            auto split = split_scaled_H(ctx, y);
            const u64 k = h_exponent(code, split->h);
            for (int flip = 0; flip < (ctx.characteristic() == 2 ? 1 : 2); ++flip) {
                const u64 kk = flip ? (k + q1 / 2) % q1 : k;
                const FieldElement cc = flip ? ctx.neg(split->c) : split->c;
                const auto f = code.fold(kk);
                if (f.index == 0 || f.index == j)
                    continue;
                Codeword w = make_word(code.length(), {{0, ctx.one()}, {j, c}, {f.index, f.negated ? ctx.neg(cc) : cc}});
                require(syndrome(code, w).index == 0, ErrorCode::FormulaMismatch, "weight-3 scan: bad word");
                return w;
            }
        }
    }
    return std::nullopt;
}

// Normalized search for weight w >= 4: position 0 carries coefficient 1.
class WeightSearch {
public:
    WeightSearch(const ZetterbergCode& code, int weight) : code_(code), ctx_(code.ctx()), weight_(weight)
    {
        units_ = q0_units(ctx_);
        for (std::size_t k = 1; k < code.length(); ++k)
            for (FieldElement c : units_)
                last_[ctx_.mul(c, code.position(k)).index].push_back({k, c});
    }

    std::optional<Codeword> run()
    {
        chosen_.clear();
        if (descend(ctx_.one(), 0))
            return found_;
        return std::nullopt;
    }

private:
    bool descend(FieldElement partial, std::size_t last_pos)
    {
        if (static_cast<int>(chosen_.size()) == weight_ - 2) {
            auto it = last_.find(ctx_.neg(partial).index);
            if (it == last_.end())
                return false;
            for (const auto& [k, c] : it->second) {
                if (k <= last_pos)
                    continue;
                std::vector<std::pair<std::size_t, FieldElement>> e{{0, ctx_.one()}};
                e.insert(e.end(), chosen_.begin(), chosen_.end());
                e.push_back({k, c});
                found_ = make_word(code_.length(), e);
                return true;
            }
            return false;
        }
        for (std::size_t j = last_pos + 1; j < code_.length(); ++j) {
            for (FieldElement c : units_) {
                chosen_.push_back({j, c});
                if (descend(ctx_.add(partial, ctx_.mul(c, code_.position(j))), j))
                    return true;
                chosen_.pop_back();
            }
        }
        return false;
    }

    const ZetterbergCode& code_;
    const FieldContext& ctx_;
    int weight_;
    std::vector<FieldElement> units_;
    std::unordered_map<u64, std::vector<std::pair<std::size_t, FieldElement>>> last_;
    std::vector<std::pair<std::size_t, FieldElement>> chosen_;
    Codeword found_;
};

} // namespace

const char* variant_name(Variant v) noexcept { return v == Variant::Full ? "full" : "half"; }

std::optional<Variant> parse_variant(std::string_view name)
{
    if (name == "full")
        return Variant::Full;
    if (name == "half")
        return Variant::Half;
    return std::nullopt;
}

std::vector<std::size_t> Codeword::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i].index != 0)
            out.push_back(i);
    return out;
}

std::size_t Codeword::weight() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs.begin(), coeffs.end(), [](FieldElement c) { return c.index != 0; }));
}

ZetterbergCode::ZetterbergCode(FieldContext ctx, Variant variant) : ctx_(std::move(ctx)), variant_(variant)
{
    require(ctx_.arena() == Arena::Ambient, ErrorCode::InvalidArgument, "codes live in the ambient arena");
    if (variant_ == Variant::Half && ctx_.characteristic() == 2)
        raise(ErrorCode::HalfVariantNeedsOddQ0, "the half code needs odd q0");
    xi_ = ctx_.xi();
    const u64 len = variant_ == Variant::Full ? ctx_.q() + 1 : (ctx_.q() + 1) / 2;
    require(2 * static_cast<u64>(s()) <= len, ErrorCode::InvalidArgument, "code dimension would be negative");
    positions_.resize(len);
    FieldElement x = ctx_.one();
    for (u64 i = 0; i < len; ++i) {
        positions_[i] = x;
        x = ctx_.mul(x, xi_);
    }
}

ZetterbergCode::Folded ZetterbergCode::fold(std::uint64_t k) const
{
    k %= ctx_.q() + 1;
    if (k >= length())
        return {static_cast<std::size_t>(k - length()), true};
    return {static_cast<std::size_t>(k), false};
}

ZetterbergCode build_code(std::uint64_t q0, unsigned s, Variant variant, const Caps& caps)
{
    auto form = prime_power_form(q0);
    require(form.has_value(), ErrorCode::InvalidArgument, "q0 must be a prime power");
    require(s >= 1, ErrorCode::InvalidArgument, "s must be positive");
    if (variant == Variant::Half && form->p == 2)
        raise(ErrorCode::HalfVariantNeedsOddQ0, "the half code needs odd q0");
    return ZetterbergCode(make_field(form->p, form->m, s, caps), variant);
}

FieldElement syndrome(const ZetterbergCode& code, const Codeword& word)
{
    if (word.coeffs.size() != code.length())
        raise(ErrorCode::LengthMismatch, "word length " + std::to_string(word.coeffs.size()) +
                                             " != code length " + std::to_string(code.length()));
    const FieldContext& ctx = code.ctx();
    FieldElement acc = ctx.zero();
    for (std::size_t i = 0; i < word.coeffs.size(); ++i) {
        const FieldElement c = word.coeffs[i];
        if (c.index == 0)
            continue;
        require(ctx.in_level(c, Level::Q0), ErrorCode::InvalidArgument, "codeword entry outside F_q0");
        acc = ctx.add(acc, ctx.mul(c, code.position(i)));
    }
    return acc;
}

bool contains(const ZetterbergCode& code, const Codeword& word) { return syndrome(code, word).index == 0; }

Codeword shift_codeword(const ZetterbergCode& code, const Codeword& word)
{
    if (word.coeffs.size() != code.length())
        raise(ErrorCode::LengthMismatch, "shift: word length mismatch");
    const std::size_t n = word.coeffs.size();
    Codeword out;
    out.coeffs.resize(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        out.coeffs[i + 1] = word.coeffs[i];
    out.coeffs[0] = code.variant() == Variant::Half ? code.ctx().neg(word.coeffs[n - 1]) : word.coeffs[n - 1];
    return out;
}

std::vector<FieldElement> q0_coordinates(const FieldContext& ctx, FieldElement y)
{
    return CoordinateSolver(ctx)(y);
}

Matrix parity_check_matrix(const ZetterbergCode& code)
{
    const CoordinateSolver solve(code.ctx());
    Matrix h;
    h.rows = 2 * code.s();
    h.cols = code.length();
    h.a.assign(h.rows * h.cols, FieldElement{0});
    for (std::size_t i = 0; i < h.cols; ++i) {
        auto col = solve(code.position(i));
        for (std::size_t r = 0; r < h.rows; ++r)
            h.at(r, i) = col[r];
    }
    return h;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FieldContext& ctx, Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pr = r;
        while (pr < m.rows && m.at(pr, c).index == 0)
            ++pr;
        if (pr == m.rows)
            continue;
        for (std::size_t t = 0; t < m.cols; ++t)
            std::swap(m.at(pr, t), m.at(r, t));
        const FieldElement inv = ctx.inv(m.at(r, c));
        for (std::size_t t = 0; t < m.cols; ++t)
            m.at(r, t) = ctx.mul(m.at(r, t), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).index == 0)
                continue;
            const FieldElement f = m.at(i, c);
            for (std::size_t t = 0; t < m.cols; ++t)
                m.at(i, t) = ctx.sub(m.at(i, t), ctx.mul(f, m.at(r, t)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank_over_q0(const FieldContext& ctx, Matrix m) { return rref(ctx, m).size(); }

std::vector<std::vector<FieldElement>> kernel_basis(const FieldContext& ctx, Matrix m)
{
    const auto pivots = rref(ctx, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<FieldElement> v(m.cols, ctx.zero());
        v[free] = ctx.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = ctx.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<int> min_distance_formula(std::uint64_t q0, unsigned s, Variant variant)
{
    auto form = prime_power_form(q0);
    require(form.has_value(), ErrorCode::InvalidArgument, "q0 must be a prime power");
    require(s >= 1, ErrorCode::InvalidArgument, "s must be positive");
    const bool even_s = s % 2 == 0;
    if (variant == Variant::Half) {
        if (form->p == 2)
            raise(ErrorCode::HalfVariantNeedsOddQ0, "the half code needs odd q0");
        if (q0 == 3)
            return s == 1 ? std::nullopt : std::optional<int>(5);
        return even_s ? 4 : 3;
    }
    if (form->p != 2)
        return 2;
    if (q0 == 2)
        return even_s ? 5 : 3;
    return even_s ? 4 : 3;
}

DistanceSearch min_distance_exhaustive(const ZetterbergCode& code, int max_weight)
{
    require(max_weight >= 1, ErrorCode::InvalidArgument, "max_weight must be positive");
    DistanceSearch out;
    if (code.dimension() == 0)
        return out;
    for (int w = 2; w <= max_weight; ++w) {
        std::optional<Codeword> found;
        if (w == 2) {
            found = search_weight2(code);
        } else if (w == 3) {
            found = search_weight3(code);
        } else {
            require(code.length() <= code.ctx().caps().exhaustive_len_cap, ErrorCode::SizeCapExceeded,
                    "weight >= 4 search: length exceeds the configured cap");
            found = WeightSearch(code, w).run();
        }
        if (found) {
            require(contains(code, *found) && found->weight() == static_cast<std::size_t>(w),
                    ErrorCode::FormulaMismatch, "exhaustive search produced an invalid word");
            out.distance = w;
            out.witness = std::move(*found);
            return out;
        }
    }
    return out;
}

Weight3Witness weight3_witness_even(const ZetterbergCode& code, unsigned i, unsigned j)
{
    const FieldContext& ctx = code.ctx();
    require(code.variant() == Variant::Full && ctx.characteristic() == 2 && code.q0() >= 4 && code.s() % 2 == 1,
            ErrorCode::PreconditionViolated, "weight3_witness_even: needs the full code, even q0 >= 4, odd s");
    require(1 <= i && i < j && j <= code.q0(), ErrorCode::PreconditionViolated,
            "weight3_witness_even: need 1 <= i < j <= q0");
    const u64 step = (code.q() + 1) / (code.q0() + 1);
    const FieldElement theta = ctx.pow(code.xi(), step);
    const FieldElement ti = ctx.pow(theta, i);
    const FieldElement tj = ctx.pow(theta, j);
    const FieldElement one = ctx.one();
    const FieldElement den = ctx.inv(ctx.mul(ctx.add(ti, tj), ctx.add(ti, tj)));
    const FieldElement a = ctx.mul(ctx.mul(ti, ctx.mul(ctx.add(tj, one), ctx.add(tj, one))), den);
    const FieldElement b = ctx.mul(ctx.mul(tj, ctx.mul(ctx.add(ti, one), ctx.add(ti, one))), den);
    require(a.index != 0 && b.index != 0 && ctx.in_level(a, Level::Q0) && ctx.in_level(b, Level::Q0),
            ErrorCode::FormulaMismatch, "weight3_witness_even: coefficients left F_q0^*");
    Weight3Witness out;
    out.word = make_word(code.length(), {{0, one}, {i * step, a}, {j * step, b}});
    require(contains(code, out.word) && out.word.weight() == 3, ErrorCode::FormulaMismatch,
            "weight3_witness_even: syndrome is not zero");
    return out;
}

Weight3Witness weight3_witness_half_odd(const ZetterbergCode& code)
{
    const FieldContext& ctx = code.ctx();
    require(code.variant() == Variant::Half && code.q0() >= 5 && code.s() % 2 == 1,
            ErrorCode::PreconditionViolated, "weight3_witness_half_odd: needs the half code, odd q0 >= 5, odd s");
    const QuarticPair pair = find_nonsquare_quartic_pair(ctx);
    const FieldElement c1 = pair.c1, c2 = pair.c2;
    const FieldElement delta = quartic_delta(ctx, c1, c2);
    const auto root = ctx.sqrt(delta);
    require(root.has_value() && !ctx.in_level(*root, Level::Q), ErrorCode::FormulaMismatch,
            "weight3_witness_half_odd: sqrt(delta) should lie outside F_q");
    const FieldElement one = ctx.one();
    const FieldElement two = ctx.constant(2);
    const FieldElement c1sq = ctx.mul(c1, c1), c2sq = ctx.mul(c2, c2);
    const FieldElement zeta1 = ctx.div(ctx.add(ctx.sub(ctx.sub(c2sq, c1sq), one), *root), ctx.mul(two, c1));
    const FieldElement zeta2 = ctx.div(ctx.sub(ctx.sub(ctx.sub(c1sq, c2sq), one), *root), ctx.mul(two, c2));
    require(ctx.add(ctx.add(ctx.mul(c1, zeta1), ctx.mul(c2, zeta2)), one).index == 0,
            ErrorCode::FormulaMismatch, "weight3_witness_half_odd: linear relation fails");
    require(ctx.in_subgroup(zeta1, Subgroup::H) && ctx.in_subgroup(zeta2, Subgroup::H),
            ErrorCode::FormulaMismatch, "weight3_witness_half_odd: zeta outside H");

    const auto f1 = code.fold(h_exponent(code, zeta1));
    const auto f2 = code.fold(h_exponent(code, zeta2));
    Weight3Witness out;
    if (f1.index != 0 && f2.index != 0 && f1.index != f2.index) {
        out.word = make_word(code.length(), {{0, one},
                                             {f1.index, f1.negated ? ctx.neg(c1) : c1},
                                             {f2.index, f2.negated ? ctx.neg(c2) : c2}});
        if (contains(code, out.word) && out.word.weight() == 3)
            return out;
    }
    // Positions collided: fall back to the direct scan.
    auto scanned = search_weight3(code);
    require(scanned.has_value(), ErrorCode::FormulaMismatch, "weight3_witness_half_odd: no weight-3 word");
    out.word = std::move(*scanned);
    out.constructed = false;
    return out;
}

} // namespace zett
