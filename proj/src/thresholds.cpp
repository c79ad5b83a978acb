/**************************************************************************
 * thresholds.cpp
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
#include <zetterberg/thresholds.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace zett {

namespace {

using boost::multiprecision::cpp_int;

constexpr unsigned kSearchLimit = 100001;

PrimePowerForm checked_form(std::uint64_t q0, Parity parity)
{
    auto form = prime_power_form(q0);
    require(form.has_value(), ErrorCode::InvalidArgument, "q0 must be a prime power");
    require((form->p == 2) == (parity == Parity::Even), ErrorCode::InvalidArgument,
            parity == Parity::Even ? "q0 must be even" : "q0 must be odd");
    return *form;
}

cpp_int ipow(cpp_int base, unsigned e)
{
    cpp_int r = 1;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Q - B sqrt(Q) > C, with Q = q0^s, decided without floating point.
bool sqrt_combo_exceeds(const cpp_int& Q, const cpp_int& B, const cpp_int& C)
{
    const cpp_int L = Q - C; // need L > B sqrt(Q)
    if (B == 0)
        return L > 0;
    if (B > 0)
        return L > 0 && L * L > B * B * Q;
    if (L >= 0)
        return true;
    return L * L < B * B * Q;
}

unsigned least_odd(const std::function<bool(unsigned)>& holds)
{
    for (unsigned s = 3; s <= kSearchLimit; s += 2)
        if (holds(s))
            return s;
    raise(ErrorCode::NotFound, "no odd s below the search limit satisfies the inequality");
}

} // namespace

const char* parity_name(Parity p) noexcept { return p == Parity::Odd ? "odd" : "even"; }

std::optional<Parity> parse_parity(const std::string& name)
{
    if (name == "odd")
        return Parity::Odd;
    if (name == "even")
        return Parity::Even;
    return std::nullopt;
}

bool sodd_holds(std::uint64_t q0, unsigned s)
{
    checked_form(q0, Parity::Odd);
    const cpp_int lhs = cpp_int(4) * (s - 1) * (s - 1) * q0;
    const cpp_int rhs = cpp_int(q0 - 1) * (q0 - 1);
    return lhs < rhs;
}

bool bounds_odd_holds(std::uint64_t q0, unsigned s)
{
    checked_form(q0, Parity::Odd);
    const unsigned long long m = (q0 - 1) / 2;
    const cpp_int two_m1 = ipow(2, static_cast<unsigned>(m - 1));
    const cpp_int B = (cpp_int(m) - 3) * two_m1 + 2;
    const cpp_int C = 3 * two_m1 - 1;
    return sqrt_combo_exceeds(ipow(q0, s), B, C);
}

bool shiine_holds(std::uint64_t q0, unsigned s)
{
    checked_form(q0, Parity::Odd);
    const unsigned long long m = (q0 - 1) / 2;
    const cpp_int two_m = ipow(2, static_cast<unsigned>(m));
    const cpp_int B = (cpp_int(m) - 2) * two_m + 2;
    const cpp_int C = two_m - 1;
    return sqrt_combo_exceeds(ipow(q0, s), B, C);
}

bool bounds_even_holds(std::uint64_t q0, unsigned s)
{
    checked_form(q0, Parity::Even);
    const cpp_int half = ipow(cpp_int(q0 / 2), static_cast<unsigned>(q0 - 1));
    const cpp_int q = q0;
    const cpp_int B = half * (2 * q * q - 7 * q + 3);
    const cpp_int C = half * (4 * q - 2) - q * q;
    return sqrt_combo_exceeds(ipow(q, s), B, C);
}

std::optional<unsigned> s_star_lower_odd(std::uint64_t q0)
{
    std::optional<unsigned> best;
    // The inequality is monotone in s, so stop at the first failure.
    for (unsigned s = 3; s <= kSearchLimit && sodd_holds(q0, s); s += 2)
        best = s;
    return best;
}

unsigned s_star_upper_odd(std::uint64_t q0)
{
    return least_odd([q0](unsigned s) { return bounds_odd_holds(q0, s); });
}

unsigned s_prime_star_odd(std::uint64_t q0)
{
    require(q0 >= 5, ErrorCode::PreconditionViolated, "s'_* needs q0 >= 5");
    return least_odd([q0](unsigned s) { return shiine_holds(q0, s); });
}

std::optional<unsigned> s_star_lower_even(std::uint64_t q0)
{
    checked_form(q0, Parity::Even);
    std::uint64_t s = q0 / 2;
    if (s % 2 == 0)
        --s;
    if (s < 3)
        return std::nullopt;
    return static_cast<unsigned>(s);
}

unsigned s_star_upper_even(std::uint64_t q0)
{
    return least_odd([q0](unsigned s) { return bounds_even_holds(q0, s); });
}

bool forced_three_by_thresholds(std::uint64_t q0, unsigned s)
{
    const bool even = q0 % 2 == 0;
    if (s < 3 || s % 2 == 0)
        return false;
    if (!even && q0 == 3)
        return true;
    const unsigned upper = even ? s_star_upper_even(q0) : s_star_upper_odd(q0);
    if (s >= upper)
        return true;
    for (unsigned d = 3; d < s; d += 2)
        if (s % d == 0 && forced_three_by_thresholds(q0, d))
            return true;
    return false;
}

std::vector<unsigned> gap_set(std::uint64_t q0)
{
    const bool even = q0 % 2 == 0;
    const auto lower = even ? s_star_lower_even(q0) : s_star_lower_odd(q0);
    const unsigned upper = even ? s_star_upper_even(q0) : s_star_upper_odd(q0);
    std::vector<unsigned> out;
    for (unsigned s = lower.value_or(1) + 2; s < upper; s += 2)
        if (!forced_three_by_thresholds(q0, s))
            out.push_back(s);
    return out;
}

ThresholdReport threshold_report(std::uint64_t q0)
{
    ThresholdReport r;
    r.q0 = q0;
    r.parity = q0 % 2 == 0 ? Parity::Even : Parity::Odd;
    if (r.parity == Parity::Even) {
        r.s_star_lower = s_star_lower_even(q0);
        r.s_star_upper = s_star_upper_even(q0);
    } else {
        r.s_star_lower = s_star_lower_odd(q0);
        r.s_star_upper = s_star_upper_odd(q0);
        if (q0 >= 5)
            r.s_prime_star = s_prime_star_odd(q0);
    }
    r.gap = gap_set(q0);
    return r;
}

LemmaRangeResult lemma_range_check_odd(std::uint64_t q0, double guard)
{
    LemmaRangeResult r;
    checked_form(q0, Parity::Odd);
    if (q0 < 13)
        return r;
    r.applicable = true;
    const double lq = std::log(static_cast<double>(q0));
    const double l2 = std::log(2.0);
    r.lower = (static_cast<double>(q0) * l2 - 5.0) / lq + 2.0;
    r.upper = (static_cast<double>(q0) * l2 - 5.0 * l2) / lq + 4.0;
    r.s_star_upper = s_star_upper_odd(q0);
    r.s_prime_star = s_prime_star_odd(q0);
    const double s = r.s_star_upper;
    const auto near = [guard](double a, double b) { return std::fabs(a - b) <= guard * std::fabs(b); };
    r.ambiguous = near(s, r.lower) || near(s, r.upper);
    const bool inside = r.lower < s && s < r.upper;
    const unsigned diff = r.s_prime_star - r.s_star_upper;
    const bool diff_ok = r.s_prime_star >= r.s_star_upper && (diff == 0 || diff == 2);
    r.ok = (inside || r.ambiguous) && diff_ok;
    return r;
}

std::vector<std::uint64_t> prime_powers(Parity parity, std::uint64_t q0_max)
{
    std::vector<std::uint64_t> out;
    if (parity == Parity::Even) {
        for (std::uint64_t q = 2; q <= q0_max; q *= 2)
            out.push_back(q);
        return out;
    }
    std::vector<bool> composite(q0_max + 1, false);
    for (std::uint64_t p = 3; p <= q0_max; p += 2) {
        if (composite[p])
            continue;
        for (std::uint64_t k = p * p; k <= q0_max; k += 2 * p)
            composite[k] = true;
        for (std::uint64_t q = p; q <= q0_max; q *= p) {
            out.push_back(q);
            if (q > q0_max / p)
                break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string thresholds_csv(Parity parity, std::uint64_t q0_max)
{
    std::ostringstream os;
    os << (parity == Parity::Odd ? "q0,s_star_lower,s_star_upper,s_prime_star,gap\n"
                                 : "q0,s_star_lower,s_star_upper,gap\n");
    for (std::uint64_t q0 : prime_powers(parity, q0_max)) {
        const ThresholdReport r = threshold_report(q0);
        os << q0 << ',';
        if (r.s_star_lower)
            os << *r.s_star_lower;
        os << ',' << r.s_star_upper << ',';
        if (parity == Parity::Odd) {
            if (r.s_prime_star)
                os << *r.s_prime_star;
            os << ',';
        }
        for (std::size_t i = 0; i < r.gap.size(); ++i)
            os << (i ? ";" : "") << r.gap[i];
        os << '\n';
    }
    return os.str();
}

} // namespace zett
