/**************************************************************************
 * test_thresholds.cpp
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
#include <zetterberg/gf.hpp>
#include <zetterberg/thresholds.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

using namespace zett;

namespace {

using Big = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<300>>;

Big bpow(Big b, long double e) { return boost::multiprecision::pow(b, Big(e)); }

// The inequalities in 300-digit decimal floating point.
bool f_bounds_odd(std::uint64_t q0, unsigned s)
{
    const long m = static_cast<long>(q0 - 1) / 2;
    const Big two_m1 = bpow(2, m - 1);
    const Big lhs = bpow(q0, s) - bpow(q0, s / 2.0L) * (Big(m - 3) * two_m1 + 2);
    return lhs > 3 * two_m1 - 1;
}

bool f_shiine(std::uint64_t q0, unsigned s)
{
    const long m = static_cast<long>(q0 - 1) / 2;
    const Big two_m = bpow(2, m);
    const Big lhs = bpow(q0, s) - bpow(q0, s / 2.0L) * (Big(m - 2) * two_m + 2);
    return lhs > two_m - 1;
}

bool f_bounds_even(std::uint64_t q0, unsigned s)
{
    const Big h = bpow(Big(q0) / 2, static_cast<long double>(q0 - 1));
    const Big q = q0;
    const Big B = h * (2 * q * q - 7 * q + 3);
    const Big C = h * (4 * q - 2) - q * q;
    return bpow(q0, s) - bpow(q0, s / 2.0L) * B > C;
}

template <class Pred>
unsigned least_odd(Pred pred)
{
    for (unsigned s = 3;; s += 2)
        if (pred(s))
            return s;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("inequalities agree with high-precision evaluation")
{
    for (std::uint64_t q0 : prime_powers(Parity::Odd, 130)) {
        for (unsigned s = 3; s <= 31; s += 2) {
            CHECK(bounds_odd_holds(q0, s) == f_bounds_odd(q0, s));
            CHECK(shiine_holds(q0, s) == f_shiine(q0, s));
            CHECK(sodd_holds(q0, s) == (4 * (s - 1) * (s - 1) * q0 < (q0 - 1) * (q0 - 1)));
        }
    }
    for (std::uint64_t q0 : prime_powers(Parity::Even, 128))
        for (unsigned s = 3; s <= 241; s += 2)
            REQUIRE(bounds_even_holds(q0, s) == f_bounds_even(q0, s));
}

TEST_CASE("threshold values agree with high-precision search")
{
    for (std::uint64_t q0 : prime_powers(Parity::Odd, 250)) {
        CAPTURE(q0);
        CHECK(s_star_upper_odd(q0) == least_odd([&](unsigned s) { return f_bounds_odd(q0, s); }));
        if (q0 >= 5)
            CHECK(s_prime_star_odd(q0) == least_odd([&](unsigned s) { return f_shiine(q0, s); }));
        std::optional<unsigned> lower;
        for (unsigned s = 3; 4 * (s - 1) * (s - 1) * q0 < (q0 - 1) * (q0 - 1); s += 2)
            lower = s;
        CHECK(s_star_lower_odd(q0) == lower);
    }
    for (std::uint64_t q0 : prime_powers(Parity::Even, 128)) {
        CAPTURE(q0);
        CHECK(s_star_upper_even(q0) == least_odd([&](unsigned s) { return f_bounds_even(q0, s); }));
        std::optional<unsigned> lower;
        for (unsigned s = 3; 2 * s <= q0; s += 2)
            lower = s;
        CHECK(s_star_lower_even(q0) == lower);
    }
}

TEST_CASE("gap sets follow from the thresholds")
{
    auto check_gap = [](std::uint64_t q0, unsigned lo, unsigned hi) {
        // forced: s >= hi, or q0 = 3, or a proper divisor that is forced
        std::function<bool(unsigned)> forced = [&](unsigned s) {
            if (s >= hi || q0 == 3)
                return true;
            for (unsigned d = 3; d < s; d += 2)
                if (s % d == 0 && forced(d))
                    return true;
            return false;
        };
        std::vector<unsigned> want;
        for (unsigned s = lo + 2; s < hi; s += 2)
            if (!forced(s))
                want.push_back(s);
        CHECK(gap_set(q0) == want);
    };
    for (std::uint64_t q0 : prime_powers(Parity::Odd, 200))
        check_gap(q0, s_star_lower_odd(q0).value_or(1), s_star_upper_odd(q0));
    for (std::uint64_t q0 : prime_powers(Parity::Even, 256))
        check_gap(q0, s_star_lower_even(q0).value_or(1), s_star_upper_even(q0));
}

TEST_CASE("tables match the golden files")
{
    CHECK(thresholds_csv(Parity::Odd, 59) == slurp(ZETT_GOLDEN_DIR "/thresholds_odd.csv"));
    CHECK(thresholds_csv(Parity::Even, 128) == slurp(ZETT_GOLDEN_DIR "/thresholds_even.csv"));
}

TEST_CASE("spot values")
{
    CHECK(s_star_upper_odd(3) == 3);
    CHECK(s_star_upper_odd(13) == 5);
    CHECK(s_star_upper_odd(59) == 13);
    CHECK(s_prime_star_odd(29) == 9);
    CHECK(s_star_lower_odd(19) == 3u);
    CHECK_FALSE(s_star_lower_odd(17));
    CHECK(s_star_upper_even(2) == 3);
    CHECK(s_star_upper_even(16) == 27);
    CHECK(s_star_lower_even(16) == 7u);
    CHECK(gap_set(31) == std::vector<unsigned>{5, 7});
    CHECK(gap_set(3).empty());
    CHECK(forced_three_by_thresholds(13, 15) == true); // 15 >= s_* = 5
    CHECK(forced_three_by_thresholds(13, 3) == false);
    CHECK(forced_three_by_thresholds(3, 5));
    CHECK(forced_three_by_thresholds(47, 9) == false);
    CHECK(forced_three_by_thresholds(13, 9));
    CHECK(forced_three_by_thresholds(16, 81) == true);
    CHECK(parse_parity("even") == Parity::Even);
    CHECK_FALSE(parse_parity("both"));
}

TEST_CASE("prime power lists")
{
    CHECK(prime_powers(Parity::Odd, 30) == std::vector<std::uint64_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
    CHECK(prime_powers(Parity::Even, 70) == std::vector<std::uint64_t>{2, 4, 8, 16, 32, 64});
    CHECK(prime_powers(Parity::Odd, 59).size() == 20);
}

TEST_CASE("s_* lies in the logarithmic window")
{
    for (std::uint64_t q0 : prime_powers(Parity::Odd, 199)) {
        const auto r = lemma_range_check_odd(q0);
        if (q0 < 13) {
            CHECK_FALSE(r.applicable);
            continue;
        }
        CAPTURE(q0);
        CHECK(r.applicable);
        CHECK(r.ok);
        CHECK_FALSE(r.ambiguous);
        const double l = std::log(static_cast<double>(q0));
        CHECK(r.lower == doctest::Approx((q0 * std::log(2.0) - 5) / l + 2));
        CHECK(r.upper == doctest::Approx((q0 * std::log(2.0) - 5 * std::log(2.0)) / l + 4));
        CHECK(r.s_star_upper >= r.lower);
        CHECK(r.s_star_upper <= r.upper);
    }
}
