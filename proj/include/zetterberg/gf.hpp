/**************************************************************************
 * gf.hpp
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

#include <zetterberg/caps.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zett {

// Subfield levels of the tower F_q0 <= F_q <= F_q^2.
enum class Level { Q0, Q, Q2 };

// Multiplicative subgroups: H has order q+1, the others are F_q^*, F_q0^*.
enum class Subgroup { H, FqStar, Fq0Star };

// Ambient is F_{p^(2sm)} (home of H); Base is F_{p^(sm)} = F_q only.
enum class Arena { Base, Ambient };

const char* level_name(Level level) noexcept;

// An element of F_{p^n} packed as sum c_i p^i over its polynomial-basis
// coefficients c_0..c_{n-1}. Index 0 is zero and index 1 is one.
struct FieldElement {
    std::uint64_t index = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

// Trial division to 10^6, then Pollard rho for whatever remains.
std::vector<PrimePower> factorize(std::uint64_t n);

struct PrimePowerForm {
    std::uint32_t p = 0;
    unsigned m = 0;
};

std::optional<PrimePowerForm> prime_power_form(std::uint64_t q);

// Rabin's test; poly is ascending-degree over F_p and must be monic.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

// The rank-th monic irreducible of degree n in lexicographic order of the
// ascending coefficient tuple. rank 0 is the lexicographic minimum.
std::vector<std::uint32_t> find_irreducible_nth(std::uint32_t p, unsigned n, unsigned rank);

inline std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned n)
{
    return find_irreducible_nth(p, n, 0);
}

struct FieldSpec {
    std::uint32_t p = 2;
    unsigned m = 1;
    unsigned s = 1;
    Arena arena = Arena::Ambient;
    std::vector<std::uint32_t> modulus; // empty selects find_irreducible

    unsigned degree() const { return (arena == Arena::Ambient ? 2u : 1u) * s * m; }
};

class FieldContext {
public:
    explicit FieldContext(FieldSpec spec, const Caps& caps = {});

    const FieldSpec& spec() const;
    const Caps& caps() const;
    std::uint32_t characteristic() const;
    unsigned degree() const;
    std::uint64_t order() const;
    std::uint64_t q0() const;
    std::uint64_t q() const;
    Arena arena() const;
    bool has_level(Level level) const;
    std::uint64_t level_order(Level level) const;
    Level top_level() const;

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement generator() const;
    const std::vector<PrimePower>& group_order_factors() const;

    FieldElement constant(std::int64_t c) const;
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement x) const;
    bool valid(FieldElement x) const { return x.index < order(); }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement scale(FieldElement a, std::int64_t c) const { return mul(a, constant(c)); }

    // x^{q0} or x^q. Q2 is the identity on the ambient arena.
    FieldElement frobenius(FieldElement x, Level level) const;
    FieldElement conjugate(FieldElement x) const { return frobenius(x, Level::Q); }

    bool in_level(FieldElement x, Level level) const;
    FieldElement level_generator(Level level) const;
    // Sorted by index; includes zero.
    std::vector<FieldElement> level_elements(Level level) const;

    std::uint64_t subgroup_order(Subgroup g) const;
    // e with subgroup == <g^e>.
    std::uint64_t subgroup_exponent(Subgroup g) const;
    bool in_subgroup(FieldElement x, Subgroup g) const;
    // Generator of H, i.e. g^{q-1}. Ambient arena only.
    FieldElement xi() const;

    // Square root in this arena, if one exists.
    std::optional<FieldElement> sqrt(FieldElement x) const;

    bool has_log_table() const;
    std::uint64_t log(FieldElement x) const; // x nonzero
    // k with base^k == x, where base has multiplicative order base_order.
    std::optional<std::uint64_t> discrete_log(FieldElement base, FieldElement x,
                                              std::uint64_t base_order) const;
    FieldElement exp(std::uint64_t k) const;

    std::string to_string(FieldElement x) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    friend class LinearMap;
};

FieldContext make_field(std::uint32_t p, unsigned m, unsigned s, const Caps& caps = {});
FieldContext make_base_field(std::uint32_t p, unsigned m, unsigned s, const Caps& caps = {});
// Same shape as ctx but with the rank-th modulus.
FieldContext remake_with_modulus_rank(const FieldContext& ctx, unsigned rank);

// An F_p-linear endomorphism of the arena, stored by its images of x^i.
class LinearMap {
public:
    template <class F>
    static LinearMap from_function(const FieldContext& ctx, F&& f)
    {
        std::vector<FieldElement> cols;
        cols.reserve(ctx.degree());
        std::uint64_t basis = 1;
        for (unsigned i = 0; i < ctx.degree(); ++i) {
            cols.push_back(f(FieldElement{basis}));
            basis *= ctx.characteristic();
        }
        return LinearMap(ctx, std::move(cols));
    }

    static LinearMap multiplication_by(const FieldContext& ctx, FieldElement c);

    LinearMap(const FieldContext& ctx, std::vector<FieldElement> columns);

    FieldElement apply(FieldElement x) const;
    // In-place on a digit vector of length degree().
    void apply_digits(const std::uint32_t* in, std::uint32_t* out) const;

private:
    std::uint32_t p_;
    unsigned n_;
    std::vector<FieldElement> cols_;
    std::vector<std::uint32_t> col_digits_; // n x n, column major
    std::vector<std::uint64_t> pow_p_;
};

} // namespace zett
