/**************************************************************************
 * test_classify.cpp
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
#include <zetterberg/classify.hpp>
#include <zetterberg/code.hpp>
#include <zetterberg/errors.hpp>
#include <zetterberg/radius.hpp>

#include <doctest.h>

using namespace zett;

namespace {

// Flags recomputed from an exhaustive distance and the oracle radius.
void check_against_oracles(std::uint64_t q0, unsigned s, Variant v)
{
    CAPTURE(q0);
    CAPTURE(s);
    CAPTURE(variant_name(v));
    const auto r = classify(q0, s, v);
    Caps caps;
    caps.exhaustive_len_cap = 128;
    const auto code = build_code(q0, s, v, caps);
    const int d = *min_distance_exhaustive(code, 6).distance;
    const int rho = covering_radius_oracle(q0, s).rho;
    CHECK(r.d == d);
    CHECK(r.rho == rho);
    CHECK(r.decided);
    CHECK(r.perfect == (rho == (d - 1) / 2));
    CHECK(r.quasi_perfect == (rho == (d - 1) / 2 + 1));
    CHECK(r.maximal == (rho <= d - 1));
    CHECK(r.length == std::to_string(code.length()));
    CHECK(r.dimension == std::to_string(code.dimension()));
}

} // namespace

TEST_CASE("classification of small codes against oracles")
{
    for (auto [q0, s] : {std::pair{2u, 1u}, {2u, 2u}, {2u, 3u}, {2u, 4u}, {4u, 1u}, {4u, 2u}, {4u, 3u}, {8u, 1u},
                         {8u, 2u}, {3u, 2u}, {5u, 2u}})
        check_against_oracles(q0, s, Variant::Full);
    for (auto [q0, s] : {std::pair{3u, 2u}, {5u, 1u}, {5u, 2u}, {7u, 2u}, {3u, 3u}})
        check_against_oracles(q0, s, Variant::Half);
}

TEST_CASE("verdicts for known families")
{
    auto c = classify(2, 1, Variant::Full);
    CHECK(c.perfect);
    CHECK(c.rule == "even q0, s=1");
    c = classify(2, 2, Variant::Full);
    CHECK(c.perfect);
    CHECK(c.rule == "q0=2, s=2");
    c = classify(2, 6, Variant::Full);
    CHECK(c.quasi_perfect);
    CHECK(c.maximal);
    CHECK(c.rule == "q0=2, even s>=4");
    c = classify(16, 5, Variant::Full);
    CHECK(c.rho == 2);
    CHECK(c.quasi_perfect);
    CHECK(c.rule == "q0>=4, odd 3<=s<=q0/2");
    c = classify(3, 5, Variant::Half);
    CHECK(c.d == 5);
    CHECK(c.rho == 3);
    CHECK(c.quasi_perfect);
    CHECK(c.rule == "q0=3, s>=2");
    c = classify(19, 3, Variant::Half);
    CHECK(c.rho == 2);
    CHECK(c.quasi_perfect);
    CHECK(c.rule == "q0>=5, odd 3<=s<=s^*");
    c = classify(7, 4, Variant::Half);
    CHECK(c.rho == 3);
    CHECK(c.d == 4);
    CHECK_FALSE(c.perfect);
    CHECK_FALSE(c.quasi_perfect);
    CHECK(c.maximal);
    CHECK(c.rule == "q0>=5, even s>=2");
}

TEST_CASE("trivial half code")
{
    const auto c = classify(3, 1, Variant::Half);
    CHECK(c.rule == "trivial");
    CHECK_FALSE(c.d);
    CHECK(c.rho == 2);
    CHECK(c.length == "2");
    CHECK(c.dimension == "0");
    CHECK_FALSE(c.perfect);
    CHECK_FALSE(c.quasi_perfect);
    CHECK_FALSE(c.maximal);
}

TEST_CASE("long lengths are exact")
{
    const auto c = classify(2, 100, Variant::Full);
    CHECK(c.length == "1267650600228229401496703205377");
    CHECK(c.dimension == "1267650600228229401496703205177");
    CHECK(c.rho == 3);
}

TEST_CASE("sweep marks undecided cells as open gaps")
{
    const auto rows = sweep({16}, 7, 11, Variant::Full);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].rule != "open gap"); // s = 7 <= 8
    CHECK(rows[2].rule == "open gap"); // s = 9
    CHECK_FALSE(rows[2].decided);
    CHECK(rows[2].error.empty());
    CHECK(rows[2].length == "68719476737");
    CHECK(rows[1].rho == 3); // even s
    CHECK_THROWS_AS(sweep({6}, 1, 2, Variant::Full), Error);
    CHECK_THROWS_AS(sweep({4}, 1, 2, Variant::Half), Error);
}

TEST_CASE("renderers")
{
    const auto rows = sweep({3}, 1, 2, Variant::Half);
    const auto md = classification_markdown(rows);
    CHECK(md.find("| q0 | s | variant |") == 0);
    CHECK(md.find("| 3 | 1 | half | 2 | 0 |  | 2 |") != std::string::npos);
    CHECK(md.find("quasi-perfect") != std::string::npos);
    const auto csv = classification_csv(rows);
    CHECK(csv.rfind("q0,s,variant,length,dimension,d,rho,perfect,quasi_perfect,maximal,rule\n", 0) == 0);
    CHECK(csv.find("3,2,half,5,1,5,3,no,yes,yes,\"q0=3, s>=2\"") != std::string::npos);
}
