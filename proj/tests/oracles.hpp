/**************************************************************************
 * oracles.hpp
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
// Brute-force reference implementations used by the tests. They share no
// code with the library beyond the modulus they are handed.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Digits = std::vector<std::uint32_t>;

inline bool is_prime_naive(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<std::pair<u64, unsigned>> trial_factor(u64 n)
{
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            out.push_back({d, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

// Polynomials over F_p as ascending digit vectors.
inline Digits poly_trim(Digits a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

inline Digits poly_mod(Digits a, const Digits& m, std::uint32_t p)
{
    a = poly_trim(a);
    const Digits mm = poly_trim(m);
    // inverse of the lead coefficient by search
    std::uint32_t inv = 1;
    while ((inv * mm.back()) % p != 1)
        ++inv;
    while (a.size() >= mm.size()) {
        const std::uint32_t f = (a.back() * inv) % p;
        const std::size_t shift = a.size() - mm.size();
        for (std::size_t i = 0; i < mm.size(); ++i)
            a[shift + i] = (a[shift + i] + (p - f) * mm[i] % p) % p;
        a = poly_trim(a);
    }
    return a;
}

// Irreducible iff no monic factor of degree 1..n/2 divides it.
inline bool irreducible_naive(const Digits& f, std::uint32_t p)
{
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        Digits g(d + 1, 0);
        g[d] = 1;
        u64 count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= p;
        for (u64 k = 0; k < count; ++k) {
            u64 t = k;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

// F_p[x]/(modulus) with elements packed as sum c_i p^i, schoolbook ops.
class NaiveField {
public:
    NaiveField(std::uint32_t p, Digits modulus) : p_(p), mod_(std::move(modulus)), n_(mod_.size() - 1)
    {
        order_ = 1;
        for (std::size_t i = 0; i < n_; ++i)
            order_ *= p_;
    }

    std::uint32_t p() const { return p_; }
    std::size_t n() const { return n_; }
    u64 order() const { return order_; }

    Digits digits(u64 x) const
    {
        Digits d(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            d[i] = static_cast<std::uint32_t>(x % p_);
            x /= p_;
        }
        return d;
    }

    u64 pack(const Digits& d) const
    {
        u64 x = 0, w = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            x += (i < d.size() ? d[i] : 0) * w;
            w *= p_;
        }
        return x;
    }

    u64 add(u64 a, u64 b) const
    {
        Digits x = digits(a), y = digits(b);
        for (std::size_t i = 0; i < n_; ++i)
            x[i] = (x[i] + y[i]) % p_;
        return pack(x);
    }

    u64 neg(u64 a) const
    {
        Digits x = digits(a);
        for (auto& c : x)
            c = (p_ - c) % p_;
        return pack(x);
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const
    {
        const Digits x = digits(a), y = digits(b);
        Digits prod(2 * n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + u64{x[i]} * y[j]) % p_);
        return pack(poly_mod(prod, mod_, p_));
    }

    u64 pow(u64 a, u64 e) const
    {
        u64 r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    u64 constant(std::int64_t c) const
    {
        const std::int64_t r = ((c % static_cast<std::int64_t>(p_)) + p_) % p_;
        return static_cast<u64>(r);
    }

    // Multiplicative order by brute force.
    u64 order_of(u64 x) const
    {
        u64 k = 1, y = x;
        while (y != 1) {
            y = mul(y, x);
            ++k;
        }
        return k;
    }

    // Elements fixed by x -> x^Q.
    std::vector<u64> fixed_by(u64 Q) const
    {
        std::vector<u64> out;
        for (u64 x = 0; x < order_; ++x)
            if (pow(x, Q) == x)
                out.push_back(x);
        return out;
    }

private:
    std::uint32_t p_;
    Digits mod_;
    std::size_t n_;
    u64 order_;
};

// Nonzero squares of a subfield given as a list of its elements.
inline std::set<u64> squares_of(const NaiveField& f, const std::vector<u64>& sub)
{
    std::set<u64> out;
    for (u64 y : sub)
        if (y)
            out.insert(f.mul(y, y));
    return out;
}

// Covering radius of the code {c in F_q0^len : sum c_i pos_i = 0} by
// enumerating every vector: the least weight reaching each syndrome.
// `units` are the nonzero elements of F_q0 inside the field.
inline int covering_radius_by_vectors(const NaiveField& f, const std::vector<u64>& positions,
                                      const std::vector<u64>& units, int* min_distance = nullptr)
{
    std::vector<u64> alphabet{0};
    alphabet.insert(alphabet.end(), units.begin(), units.end());
    const std::size_t len = positions.size();
    const u64 a = alphabet.size();
    std::map<u64, int> best;
    int dmin = -1;
    std::vector<std::size_t> digit(len, 0);
    while (true) {
        u64 syn = 0;
        int w = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (digit[i]) {
                syn = f.add(syn, f.mul(alphabet[digit[i]], positions[i]));
                ++w;
            }
        }
        auto it = best.find(syn);
        if (it == best.end() || w < it->second)
            best[syn] = w;
        if (syn == 0 && w > 0 && (dmin < 0 || w < dmin))
            dmin = w;
        std::size_t i = 0;
        while (i < len && ++digit[i] == a)
            digit[i++] = 0;
        if (i == len)
            break;
    }
    if (min_distance)
        *min_distance = dmin;
    if (best.size() != f.order())
        return -1; // syndromes do not span
    int rho = 0;
    for (const auto& [s, w] : best)
        rho = std::max(rho, w);
    (void)a;
    return rho;
}

// Covering radius by growing the sets of sums of at most k steps.
inline int covering_radius_by_sums(const NaiveField& f, const std::vector<u64>& steps)
{
    std::vector<char> seen(f.order(), 0);
    std::vector<u64> current{0};
    seen[0] = 1;
    u64 covered = 1;
    int k = 0;
    while (covered < f.order()) {
        std::vector<u64> next;
        for (u64 x : current)
            for (u64 t : steps) {
                const u64 y = f.add(x, t);
                if (!seen[y]) {
                    seen[y] = 1;
                    next.push_back(y);
                }
            }
        if (next.empty())
            return -1;
        covered += next.size();
        current = std::move(next);
        ++k;
    }
    return k;
}

} // namespace oracle
