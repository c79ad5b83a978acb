/**************************************************************************
 * gf.cpp
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
#include <zetterberg/gf.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace zett {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr unsigned kMaxDegree = 64;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Saturating p^k; returns 0 on overflow past 2^64.
u64 checked_power(u64 p, unsigned k)
{
    u64 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > UINT64_MAX / p)
            return 0;
        r *= p;
    }
    return r;
}

u64 pollard_rho(u64 n)
{
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1, q = 1, ys = 0, r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        // Brent's cycle search with batched gcds.
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min<u64>(128, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                k += 128;
            } while (k < r && d == 1);
            r *= 2;
        } while (d == 1);
        if (d == n) {
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n)
            return d;
    }
}

void factor_into(u64 n, std::vector<u64>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// ---- polynomials over F_p for the irreducibility test --------------------

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

u64 inv_mod_p(u64 a, u64 p) { return powmod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& f, u64 p)
{
    trim(a);
    const std::size_t df = f.size() - 1;
    const u64 lead_inv = inv_mod_p(f.back(), p);
    while (a.size() > df) {
        u64 t = a.back() * lead_inv % p;
        std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - t) * f[i]) % p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<u64> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
    Poly r(c.begin(), c.end());
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p)
{
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1)
            r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b, u64 p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^k} mod f by k repeated p-th powers.
Poly frobenius_power_of_x(const Poly& f, u64 p, unsigned k)
{
    Poly x{0, 1};
    Poly r = poly_mod(x, f, p);
    for (unsigned i = 0; i < k; ++i)
        r = poly_powmod(r, p, f, p);
    return r;
}

} // namespace

// ---- number theory --------------------------------------------------------

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0)
            return n == sp;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n)
{
    require(n >= 1, ErrorCode::InvalidArgument, "factorize: n must be positive");
    std::vector<u64> primes;
    for (u64 d = 2; d <= 1000000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
    }
    if (n > 1)
        factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (u64 pr : primes) {
        if (!out.empty() && out.back().prime == pr)
            ++out.back().exponent;
        else
            out.push_back({pr, 1});
    }
    return out;
}

std::optional<PrimePowerForm> prime_power_form(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1 || f[0].prime > UINT32_MAX)
        return std::nullopt;
    return PrimePowerForm{static_cast<std::uint32_t>(f[0].prime), f[0].exponent};
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p)
{
    require(is_prime(p), ErrorCode::InvalidArgument, "is_irreducible: p must be prime");
    Poly f(poly.begin(), poly.end());
    trim(f);
    require(!f.empty() && f.back() == 1, ErrorCode::InvalidArgument,
            "is_irreducible: polynomial must be monic");
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 0)
        return false;
    if (n == 1)
        return true;
    if (f[0] == 0)
        return false;
    Poly x{0, 1};
    if (frobenius_power_of_x(f, p, n) != poly_mod(x, f, p))
        return false;
    for (const auto& pp : factorize(n)) {
        Poly t = poly_sub(frobenius_power_of_x(f, p, n / static_cast<unsigned>(pp.prime)), x, p);
        Poly g = poly_gcd(f, t, p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

std::vector<std::uint32_t> find_irreducible_nth(std::uint32_t p, unsigned n, unsigned rank)
{
    require(is_prime(p), ErrorCode::InvalidArgument, "find_irreducible: p must be prime");
    require(n >= 1 && n <= kMaxDegree, ErrorCode::InvalidArgument,
            "find_irreducible: degree out of range");
    // Odometer over (c0, ..., c_{n-1}) with c0 most significant.
    Poly f(n + 1, 0);
    f[n] = 1;
    for (;;) {
        if (is_irreducible(f, p)) {
            if (rank == 0)
                return f;
            --rank;
        }
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && f[static_cast<unsigned>(i)] == p - 1) {
            f[static_cast<unsigned>(i)] = 0;
            --i;
        }
        require(i >= 0, ErrorCode::NotFound, "find_irreducible: rank exceeds count");
        ++f[static_cast<unsigned>(i)];
    }
}

const char* level_name(Level level) noexcept
{
    switch (level) {
    case Level::Q0:
        return "q0";
    case Level::Q:
        return "q";
    case Level::Q2:
        return "q2";
    }
    return "?";
}

// ---- field context ---------------------------------------------------------

struct FieldContext::Impl {
    FieldSpec spec;
    Caps caps;
    std::uint32_t p = 2;
    unsigned n = 1;
    u64 order = 2;
    u64 q0 = 2;
    u64 q = 2;
    std::vector<u64> pow_p;
    u64 modulus_bits = 0; // p == 2: full modulus as a bit mask
    FieldElement gen;
    std::vector<PrimePower> factors;
    std::vector<std::uint32_t> exp_tab;
    std::vector<std::uint32_t> log_tab;
    bool tables = false;

    void unpack(u64 x, std::uint32_t* d) const
    {
        if (p == 2) {
            for (unsigned i = 0; i < n; ++i)
                d[i] = static_cast<std::uint32_t>((x >> i) & 1);
            return;
        }
        for (unsigned i = 0; i < n; ++i) {
            d[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
        }
    }

    u64 pack(const std::uint32_t* d) const
    {
        u64 x = 0;
        for (unsigned i = n; i-- > 0;)
            x = x * p + d[i];
        return x;
    }

    u64 add(u64 a, u64 b) const
    {
        if (p == 2)
            return a ^ b;
        u64 r = 0;
        for (unsigned i = 0; i < n && (a | b); ++i) {
            u64 s = a % p + b % p;
            if (s >= p)
                s -= p;
            r += s * pow_p[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    u64 neg(u64 a) const
    {
        if (p == 2)
            return a;
        u64 r = 0;
        for (unsigned i = 0; i < n && a; ++i) {
            u64 d = a % p;
            if (d)
                r += (p - d) * pow_p[i];
            a /= p;
        }
        return r;
    }

    u64 mul_plain(u64 a, u64 b) const
    {
        if (a == 0 || b == 0)
            return 0;
        if (p == 2) {
            u128 prod = 0;
            for (unsigned i = 0; i < n; ++i)
                if ((b >> i) & 1)
                    prod ^= static_cast<u128>(a) << i;
            for (unsigned i = 2 * n - 1; i-- > n;)
                if ((prod >> i) & 1)
                    prod ^= static_cast<u128>(modulus_bits) << (i - n);
            return static_cast<u64>(prod);
        }
        std::array<std::uint32_t, kMaxDegree> da{}, db{};
        unpack(a, da.data());
        unpack(b, db.data());
        std::array<u64, 2 * kMaxDegree> c{};
        for (unsigned i = 0; i < n; ++i) {
            if (!da[i])
                continue;
            for (unsigned j = 0; j < n; ++j)
                c[i + j] += static_cast<u64>(da[i]) * db[j];
        }
        const auto& f = spec.modulus;
        for (unsigned k = 2 * n - 1; k-- > n;) {
            u64 t = c[k] % p;
            if (!t)
                continue;
            u64 nt = p - t;
            for (unsigned i = 0; i < n; ++i)
                c[k - n + i] += nt * f[i];
        }
        std::array<std::uint32_t, kMaxDegree> out{};
        for (unsigned i = 0; i < n; ++i)
            out[i] = static_cast<std::uint32_t>(c[i] % p);
        return pack(out.data());
    }

    u64 mul(u64 a, u64 b) const
    {
        if (a == 0 || b == 0)
            return 0;
        if (tables) {
            u64 k = static_cast<u64>(log_tab[a]) + log_tab[b];
            if (k >= order - 1)
                k -= order - 1;
            return exp_tab[k];
        }
        return mul_plain(a, b);
    }

    u64 pow_plain(u64 a, u64 e) const
    {
        u64 r = 1;
        while (e) {
            if (e & 1)
                r = mul_plain(r, a);
            a = mul_plain(a, a);
            e >>= 1;
        }
        return r;
    }

    u64 pow(u64 a, u64 e) const
    {
        if (e == 0)
            return 1;
        if (a == 0)
            return 0;
        e %= order - 1;
        if (e == 0)
            return 1;
        if (tables)
            return exp_tab[mulmod(log_tab[a], e, order - 1)];
        return pow_plain(a, e);
    }
};

namespace {

void validate_spec(FieldSpec& spec, const Caps& caps)
{
    require(is_prime(spec.p), ErrorCode::InvalidArgument, "field: p must be prime");
    require(spec.m >= 1 && spec.s >= 1, ErrorCode::InvalidArgument, "field: m and s must be positive");
    const u64 n = static_cast<u64>(spec.arena == Arena::Ambient ? 2 : 1) * spec.s * spec.m;
    u64 order = n <= kMaxDegree ? checked_power(spec.p, static_cast<unsigned>(n)) : 0;
    if (order == 0 || order > caps.max_ambient_order || order > (u64{1} << 62)) {
        raise(ErrorCode::SizeCapExceeded,
              "field: order " + std::to_string(spec.p) + "^" + std::to_string(n) +
                  " exceeds the configured cap");
    }
    if (spec.modulus.empty()) {
        spec.modulus = find_irreducible(spec.p, static_cast<unsigned>(n));
    } else {
        require(spec.modulus.size() == n + 1, ErrorCode::InvalidArgument,
                "field: modulus degree must equal the arena degree");
        for (auto c : spec.modulus)
            require(c < spec.p, ErrorCode::InvalidArgument, "field: modulus coefficient out of range");
        require(is_irreducible(spec.modulus, spec.p), ErrorCode::InvalidArgument,
                "field: modulus is not irreducible");
    }
}

} // namespace

FieldContext::FieldContext(FieldSpec spec, const Caps& caps)
{
    validate_spec(spec, caps);
    auto impl = std::make_shared<Impl>();
    impl->spec = std::move(spec);
    impl->caps = caps;
    impl->p = impl->spec.p;
    impl->n = impl->spec.degree();
    impl->order = checked_power(impl->p, impl->n);
    impl->q0 = checked_power(impl->p, impl->spec.m);
    impl->q = checked_power(impl->p, impl->spec.m * impl->spec.s);
    impl->pow_p.resize(impl->n + 1);
    impl->pow_p[0] = 1;
    for (unsigned i = 1; i <= impl->n; ++i)
        impl->pow_p[i] = impl->pow_p[i - 1] * impl->p;
    if (impl->p == 2) {
        for (unsigned i = 0; i <= impl->n; ++i)
            if (impl->spec.modulus[i])
                impl->modulus_bits |= u64{1} << i;
    }

    const u64 group = impl->order - 1;
    impl->factors = factorize(group);
    for (u64 cand = 1; cand < impl->order; ++cand) {
        bool primitive = true;
        for (const auto& pp : impl->factors) {
            if (impl->pow_plain(cand, group / pp.prime) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            impl->gen = FieldElement{cand};
            break;
        }
    }

    if (impl->order <= caps.table_cap && impl->order <= (u64{1} << 32)) {
        impl->exp_tab.resize(group);
        impl->log_tab.assign(impl->order, 0);
        // Multiplication by g is F_p-linear: run it on digit vectors.
        std::vector<std::uint32_t> cols(static_cast<std::size_t>(impl->n) * impl->n);
        std::vector<std::uint32_t> tmp(impl->n);
        for (unsigned i = 0; i < impl->n; ++i) {
            impl->unpack(impl->mul_plain(impl->pow_p[i], impl->gen.index), tmp.data());
            std::copy(tmp.begin(), tmp.end(), cols.begin() + static_cast<std::ptrdiff_t>(i) * impl->n);
        }
        std::vector<std::uint32_t> cur(impl->n, 0), next(impl->n);
        cur[0] = 1;
        u64 x = 1;
        const unsigned n = impl->n;
        const u64 p = impl->p;
        std::vector<u64> packed_cols(n);
        for (unsigned i = 0; i < n; ++i)
            packed_cols[i] = impl->pack(cols.data() + static_cast<std::size_t>(i) * n);
        for (u64 k = 0; k < group; ++k) {
            impl->exp_tab[k] = static_cast<std::uint32_t>(x);
            impl->log_tab[x] = static_cast<std::uint32_t>(k);
            if (p == 2) {
                u64 y = 0;
                for (u64 bits = x; bits; bits &= bits - 1)
                    y ^= packed_cols[static_cast<unsigned>(std::countr_zero(bits))];
                x = y;
                continue;
            }
            std::array<u64, kMaxDegree> acc{};
            for (unsigned i = 0; i < n; ++i) {
                const u64 di = cur[i];
                if (!di)
                    continue;
                const std::uint32_t* col = cols.data() + static_cast<std::size_t>(i) * n;
                for (unsigned j = 0; j < n; ++j)
                    acc[j] += di * col[j];
            }
            x = 0;
            for (unsigned j = n; j-- > 0;) {
                next[j] = static_cast<std::uint32_t>(acc[j] % p);
                x = x * p + next[j];
            }
            std::swap(cur, next);
        }
        impl->tables = true;
    }
    impl_ = std::move(impl);
}

const FieldSpec& FieldContext::spec() const { return impl_->spec; }
const Caps& FieldContext::caps() const { return impl_->caps; }
std::uint32_t FieldContext::characteristic() const { return impl_->p; }
unsigned FieldContext::degree() const { return impl_->n; }
std::uint64_t FieldContext::order() const { return impl_->order; }
std::uint64_t FieldContext::q0() const { return impl_->q0; }
std::uint64_t FieldContext::q() const { return impl_->q; }
Arena FieldContext::arena() const { return impl_->spec.arena; }
FieldElement FieldContext::generator() const { return impl_->gen; }
const std::vector<PrimePower>& FieldContext::group_order_factors() const { return impl_->factors; }
bool FieldContext::has_log_table() const { return impl_->tables; }

bool FieldContext::has_level(Level level) const
{
    return level != Level::Q2 || arena() == Arena::Ambient;
}

Level FieldContext::top_level() const { return arena() == Arena::Ambient ? Level::Q2 : Level::Q; }

std::uint64_t FieldContext::level_order(Level level) const
{
    require(has_level(level), ErrorCode::InvalidArgument, "level q2 is absent from a base arena");
    switch (level) {
    case Level::Q0:
        return impl_->q0;
    case Level::Q:
        return impl_->q;
    case Level::Q2:
        return impl_->order;
    }
    return 0;
}

FieldElement FieldContext::constant(std::int64_t c) const
{
    std::int64_t p = impl_->p;
    std::int64_t r = c % p;
    if (r < 0)
        r += p;
    return FieldElement{static_cast<u64>(r)};
}

FieldElement FieldContext::from_coeffs(std::span<const std::uint32_t> coeffs) const
{
    require(coeffs.size() <= impl_->n, ErrorCode::InvalidArgument, "from_coeffs: too many coefficients");
    std::array<std::uint32_t, kMaxDegree> d{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        require(coeffs[i] < impl_->p, ErrorCode::InvalidArgument, "from_coeffs: coefficient out of range");
        d[i] = coeffs[i];
    }
    return FieldElement{impl_->pack(d.data())};
}

std::vector<std::uint32_t> FieldContext::coeffs(FieldElement x) const
{
    std::vector<std::uint32_t> d(impl_->n);
    impl_->unpack(x.index, d.data());
    return d;
}

FieldElement FieldContext::add(FieldElement a, FieldElement b) const { return {impl_->add(a.index, b.index)}; }
FieldElement FieldContext::neg(FieldElement a) const { return {impl_->neg(a.index)}; }
FieldElement FieldContext::sub(FieldElement a, FieldElement b) const
{
    return {impl_->add(a.index, impl_->neg(b.index))};
}
FieldElement FieldContext::mul(FieldElement a, FieldElement b) const { return {impl_->mul(a.index, b.index)}; }

FieldElement FieldContext::inv(FieldElement a) const
{
    if (a.index == 0)
        raise(ErrorCode::DivisionByZero, "inverse of zero");
    if (impl_->tables) {
        u64 k = impl_->log_tab[a.index];
        return {impl_->exp_tab[k == 0 ? 0 : impl_->order - 1 - k]};
    }
    return {impl_->pow_plain(a.index, impl_->order - 2)};
}

FieldElement FieldContext::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const { return {impl_->pow(a.index, e)}; }

FieldElement FieldContext::frobenius(FieldElement x, Level level) const
{
    return pow(x, level_order(level));
}

bool FieldContext::in_level(FieldElement x, Level level) const
{
    if (x.index == 0)
        return true;
    const u64 sub = level_order(level) - 1;
    if (impl_->tables)
        return impl_->log_tab[x.index] % ((impl_->order - 1) / sub) == 0;
    return impl_->pow(x.index, sub) == 1;
}

FieldElement FieldContext::level_generator(Level level) const
{
    return pow(impl_->gen, (impl_->order - 1) / (level_order(level) - 1));
}

std::vector<FieldElement> FieldContext::level_elements(Level level) const
{
    const u64 sub = level_order(level);
    std::vector<FieldElement> out;
    out.reserve(sub);
    out.push_back(zero());
    FieldElement h = level_generator(level);
    FieldElement x = one();
    for (u64 k = 0; k + 1 < sub; ++k) {
        out.push_back(x);
        x = mul(x, h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t FieldContext::subgroup_order(Subgroup g) const
{
    switch (g) {
    case Subgroup::H:
        require(arena() == Arena::Ambient, ErrorCode::InvalidArgument, "H lives in the ambient arena");
        return impl_->q + 1;
    case Subgroup::FqStar:
        return impl_->q - 1;
    case Subgroup::Fq0Star:
        return impl_->q0 - 1;
    }
    return 0;
}

std::uint64_t FieldContext::subgroup_exponent(Subgroup g) const
{
    return (impl_->order - 1) / subgroup_order(g);
}

bool FieldContext::in_subgroup(FieldElement x, Subgroup g) const
{
    if (x.index == 0)
        return false;
    const u64 ord = subgroup_order(g);
    if (impl_->tables)
        return impl_->log_tab[x.index] % ((impl_->order - 1) / ord) == 0;
    return impl_->pow(x.index, ord) == 1;
}

FieldElement FieldContext::xi() const { return pow(impl_->gen, subgroup_exponent(Subgroup::H)); }

std::optional<FieldElement> FieldContext::sqrt(FieldElement x) const
{
    if (x.index == 0)
        return zero();
    const u64 order = impl_->order;
    if (impl_->p == 2)
        return pow(x, order / 2);
    if (impl_->tables) {
        u64 k = impl_->log_tab[x.index];
        if (k & 1)
            return std::nullopt;
        return FieldElement{impl_->exp_tab[k / 2]};
    }
    // Tonelli-Shanks with the primitive element as the non-residue.
    u64 t = order - 1;
    unsigned e = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++e;
    }
    if (impl_->pow(x.index, (order - 1) / 2) != 1)
        return std::nullopt;
    u64 z = impl_->pow(impl_->gen.index, t);
    u64 r = impl_->pow(x.index, (t + 1) / 2);
    u64 b = impl_->pow(x.index, t);
    unsigned m = e;
    while (b != 1) {
        unsigned i = 0;
        u64 bb = b;
        while (bb != 1) {
            bb = impl_->mul(bb, bb);
            ++i;
        }
        u64 w = z;
        for (unsigned j = 0; j + 1 < m - i; ++j)
            w = impl_->mul(w, w);
        r = impl_->mul(r, w);
        z = impl_->mul(w, w);
        b = impl_->mul(b, z);
        m = i;
    }
    return FieldElement{r};
}

std::uint64_t FieldContext::log(FieldElement x) const
{
    require(x.index != 0, ErrorCode::InvalidArgument, "log of zero");
    if (impl_->tables)
        return impl_->log_tab[x.index];
    auto k = discrete_log(impl_->gen, x, impl_->order - 1);
    require(k.has_value(), ErrorCode::InvalidArgument, "log: element outside the group");
    return *k;
}

std::optional<std::uint64_t> FieldContext::discrete_log(FieldElement base, FieldElement x,
                                                        std::uint64_t base_order) const
{
    if (x.index == 0 || base.index == 0)
        return std::nullopt;
    if (impl_->pow(x.index, base_order) != 1)
        return std::nullopt;
    // Pohlig-Hellman; each prime digit by baby-step giant-step.
    u64 result = 0, modulus = 1;
    for (const auto& pp : factorize(base_order)) {
        const u64 r = pp.prime;
        u64 pe = 1;
        for (unsigned i = 0; i < pp.exponent; ++i)
            pe *= r;
        const u64 cofactor = base_order / pe;
        const u64 gp = impl_->pow(base.index, cofactor);
        const u64 xp = impl_->pow(x.index, cofactor);
        const u64 gamma = impl_->pow(gp, pe / r);
        const u64 steps = static_cast<u64>(std::sqrt(static_cast<double>(r))) + 1;
        std::unordered_map<u64, u64> baby;
        baby.reserve(steps);
        u64 cur = 1;
        for (u64 j = 0; j < steps; ++j) {
            baby.emplace(cur, j);
            cur = impl_->mul(cur, gamma);
        }
        const u64 giant = impl_->pow(gamma, r - (steps % r == 0 ? r : steps % r)); // gamma^{-steps}
        u64 k = 0, pk = 1;
        for (unsigned i = 0; i < pp.exponent; ++i) {
            u64 h = impl_->mul(xp, impl_->pow(gp, (pe - k % pe) % pe));
            h = impl_->pow(h, pe / pk / r);
            std::optional<u64> digit;
            u64 y = h;
            for (u64 a = 0; a <= steps && !digit; ++a) {
                auto it = baby.find(y);
                if (it != baby.end())
                    digit = (a * steps + it->second) % r;
                y = impl_->mul(y, giant);
            }
            if (!digit)
                return std::nullopt;
            k += *digit * pk;
            pk *= r;
        }
        u64 inv = powmod(modulus % pe, pe - pe / r - 1, pe);
        u64 t = mulmod((k + pe - result % pe) % pe, inv, pe);
        result += modulus * t;
        modulus *= pe;
    }
    return result % base_order;
}

FieldElement FieldContext::exp(std::uint64_t k) const
{
    if (impl_->tables)
        return FieldElement{impl_->exp_tab[k % (impl_->order - 1)]};
    return pow(impl_->gen, k);
}

std::string FieldContext::to_string(FieldElement x) const
{
    std::ostringstream os;
    os << '[';
    auto c = coeffs(x);
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

FieldContext make_field(std::uint32_t p, unsigned m, unsigned s, const Caps& caps)
{
    return FieldContext(FieldSpec{p, m, s, Arena::Ambient, {}}, caps);
}

FieldContext make_base_field(std::uint32_t p, unsigned m, unsigned s, const Caps& caps)
{
    return FieldContext(FieldSpec{p, m, s, Arena::Base, {}}, caps);
}

FieldContext remake_with_modulus_rank(const FieldContext& ctx, unsigned rank)
{
    FieldSpec spec = ctx.spec();
    spec.modulus = find_irreducible_nth(spec.p, spec.degree(), rank);
    return FieldContext(std::move(spec), ctx.caps());
}

// ---- linear maps -----------------------------------------------------------

LinearMap::LinearMap(const FieldContext& ctx, std::vector<FieldElement> columns)
    : p_(ctx.characteristic()), n_(ctx.degree()), cols_(std::move(columns))
{
    require(cols_.size() == n_, ErrorCode::InvalidArgument, "LinearMap: need one column per basis vector");
    col_digits_.resize(static_cast<std::size_t>(n_) * n_);
    for (unsigned i = 0; i < n_; ++i) {
        auto d = ctx.coeffs(cols_[i]);
        std::copy(d.begin(), d.end(), col_digits_.begin() + static_cast<std::ptrdiff_t>(i) * n_);
    }
    pow_p_.resize(n_ + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= n_; ++i)
        pow_p_[i] = pow_p_[i - 1] * p_;
}

LinearMap LinearMap::multiplication_by(const FieldContext& ctx, FieldElement c)
{
    return from_function(ctx, [&](FieldElement b) { return ctx.mul(b, c); });
}

FieldElement LinearMap::apply(FieldElement x) const
{
    if (p_ == 2) {
        u64 y = 0, v = x.index;
        for (unsigned i = 0; v; ++i, v >>= 1)
            if (v & 1)
                y ^= cols_[i].index;
        return {y};
    }
    std::array<std::uint32_t, kMaxDegree> in{}, out{};
    u64 v = x.index;
    for (unsigned i = 0; i < n_; ++i) {
        in[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    apply_digits(in.data(), out.data());
    u64 y = 0;
    for (unsigned i = n_; i-- > 0;)
        y = y * p_ + out[i];
    return {y};
}

void LinearMap::apply_digits(const std::uint32_t* in, std::uint32_t* out) const
{
    std::array<u64, kMaxDegree> acc{};
    for (unsigned i = 0; i < n_; ++i) {
        const u64 di = in[i];
        if (!di)
            continue;
        const std::uint32_t* col = col_digits_.data() + static_cast<std::size_t>(i) * n_;
        for (unsigned j = 0; j < n_; ++j)
            acc[j] += di * col[j];
    }
    for (unsigned j = 0; j < n_; ++j)
        out[j] = static_cast<std::uint32_t>(acc[j] % p_);
}

} // namespace zett
