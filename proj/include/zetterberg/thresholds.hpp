/**************************************************************************
 * thresholds.hpp
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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zett {

enum class Parity { Odd, Even };

const char* parity_name(Parity p) noexcept;
std::optional<Parity> parse_parity(const std::string& name);

// The inequalities, evaluated exactly for a given s (odd in all callers).
// sodd:        4 (s-1)^2 q0 < (q0-1)^2
// bounds_odd:  q0^s - q0^{s/2} ((m-3) 2^{m-1} + 2) > 3 * 2^{m-1} - 1, m = (q0-1)/2
// shiine:      q0^s - q0^{s/2} ((m-2) 2^m + 2) > 2^m - 1
// bounds_even: q0^s - q0^{s/2} B > C with B = (q0/2)^{q0-1} (2 q0^2 - 7 q0 + 3),
//              C = (q0/2)^{q0-1} (4 q0 - 2) - q0^2
bool sodd_holds(std::uint64_t q0, unsigned s);
bool bounds_odd_holds(std::uint64_t q0, unsigned s);
bool shiine_holds(std::uint64_t q0, unsigned s);
bool bounds_even_holds(std::uint64_t q0, unsigned s);

// Largest odd s >= 3 with sodd; none if s = 3 already fails.
std::optional<unsigned> s_star_lower_odd(std::uint64_t q0);
// Least odd s >= 3 satisfying bounds_odd / shiine.
unsigned s_star_upper_odd(std::uint64_t q0);
unsigned s_prime_star_odd(std::uint64_t q0);
// Largest odd s >= 3 with s <= q0/2.
std::optional<unsigned> s_star_lower_even(std::uint64_t q0);
unsigned s_star_upper_even(std::uint64_t q0);

// Odd s >= 3 forced to rho = 3 by the threshold rules alone: s >= s_*,
// q0 = 3, or a proper divisor s' > 1 that is itself forced.
bool forced_three_by_thresholds(std::uint64_t q0, unsigned s);

// Odd s strictly between s^* (1 when absent) and s_*, minus divisor-forced s.
std::vector<unsigned> gap_set(std::uint64_t q0);

struct ThresholdReport {
    std::uint64_t q0 = 0;
    Parity parity = Parity::Odd;
    std::optional<unsigned> s_star_lower;
    unsigned s_star_upper = 0;
    std::optional<unsigned> s_prime_star; // odd q0 >= 5 only
    std::vector<unsigned> gap;
};

ThresholdReport threshold_report(std::uint64_t q0);

struct LemmaRangeResult {
    bool applicable = false; // q0 >= 13
    bool ok = false;
    bool ambiguous = false; // s_* within the guard band of an endpoint
    double lower = 0;
    double upper = 0;
    unsigned s_star_upper = 0;
    unsigned s_prime_star = 0;
};

LemmaRangeResult lemma_range_check_odd(std::uint64_t q0, double guard = 1e-9);

// Prime powers of the given parity in [2, q0_max], ascending.
std::vector<std::uint64_t> prime_powers(Parity parity, std::uint64_t q0_max);

// Header plus one row per prime power. Gaps are ';'-separated.
std::string thresholds_csv(Parity parity, std::uint64_t q0_max);

} // namespace zett
