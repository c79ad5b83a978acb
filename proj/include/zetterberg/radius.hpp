/**************************************************************************
 * radius.hpp
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
#include <zetterberg/gf.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zett {

// Layered BFS over the syndrome space F_q^2 with steps c * x, c in F_q0^*,
// x in a set of powers of xi. Layer k holds the syndromes of coset
// leaders of weight k.
struct OracleLayers {
    std::vector<std::uint8_t> layer; // by ambient index
    std::vector<std::uint64_t> layer_sizes;
    int rho = 0;
    FieldElement deepest; // least index in the last layer
};

// Full code: steps F_q0^* H. Needs q^2 <= caps.oracle_cap.
OracleLayers oracle_layers(const FieldContext& ctx);
// Steps c * xi^i with 0 <= i < (q+1)/2 only.
OracleLayers oracle_layers_half(const FieldContext& ctx);

struct CriterionResult {
    int rho = 0;
    std::optional<FieldElement> witness; // in the base arena F_q
    std::uint64_t evaluations = 0;
};

// Both accept either arena and work on F_q. Odd: x in F_q^* minus the
// nonzero squares of F_q0 with chi(x(x - beta)) = 1 for all such squares
// beta. Even: alpha in F_q minus F_q0 with Tr(alpha) = 0 and
// Tr(1/(1 + b alpha)) in {0, 1} for all b in F_q0^*. Candidates are
// scanned in index order and the first hit is the witness.
CriterionResult rho_criterion_odd(const FieldContext& ctx);
CriterionResult rho_criterion_even(const FieldContext& ctx);

// Number of odd-criterion witnesses; s must be odd.
std::uint64_t witness_count_odd(const FieldContext& ctx);

struct Shortcut {
    int rho = 0;
    std::string rule;
};

std::optional<Shortcut> rho_shortcuts(std::uint64_t q0, unsigned s);

enum class Strategy { Auto, Oracle, Criterion, Shortcut, Verify };

const char* strategy_name(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(const std::string& name);

struct CrossCheck {
    std::string method;
    int rho = 0;
};

struct RadiusReport {
    std::uint64_t q0 = 0;
    unsigned s = 0;
    int rho = 0;
    std::string method; // "oracle", "criterion" or "shortcut:<rule>"
    std::optional<std::vector<std::uint32_t>> witness; // polynomial-basis digits
    std::string witness_level;                          // "q" or "q2"
    std::vector<CrossCheck> cross_checks;
    double elapsed_ms = 0;
};

RadiusReport covering_radius_oracle(std::uint64_t q0, unsigned s, const Caps& caps = {});

// Auto: shortcut, then criterion, then oracle; Undecidable if none fits.
// Verify: every feasible method, Inconsistent on disagreement.
RadiusReport covering_radius(std::uint64_t q0, unsigned s, Strategy strategy, const Caps& caps = {});

struct HalfFullCheck {
    int full_rho = 0;
    int half_rho = 0;
    bool equal = false;
};

HalfFullCheck half_full_radius_equality_check(std::uint64_t q0, unsigned s, const Caps& caps = {});

} // namespace zett
