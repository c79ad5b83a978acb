/**************************************************************************
 * test_serialize.cpp
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
#include <zetterberg/code.hpp>
#include <zetterberg/serialize.hpp>

#include <doctest.h>
#include <json.hpp>

using namespace zett;
using nlohmann::json;

TEST_CASE("field json")
{
    const auto ctx = make_field(3, 1, 2);
    const auto j = json::parse(field_json(ctx));
    CHECK(j["p"] == 3);
    CHECK(j["modulus"].size() == 5);
    CHECK(j["generator"].size() == 4);
    CHECK(j["subgroup_orders"]["H"] == 10);
    CHECK(j["subgroup_orders"]["Fq_star"] == 8);
    CHECK(j["subgroup_orders"]["Fq0_star"] == 2);
    CHECK_FALSE(j.contains("order"));
    const auto d = json::parse(field_json(ctx, true));
    CHECK(d["order"] == 81);
    CHECK(d["q"] == 9);
    CHECK(d["group_order_factors"] == json::parse("[[2,4],[5,1]]"));
    // keys keep insertion order
    CHECK(field_json(ctx).rfind("{\"p\":3,\"m\":1,\"s\":2,", 0) == 0);
}

TEST_CASE("codeword json")
{
    const auto code = build_code(4, 2, Variant::Full);
    const auto w = min_distance_exhaustive(code, 4).witness;
    const auto j = json::parse(codeword_json(code, w));
    CHECK(j["variant"] == "full");
    CHECK(j["support"].size() == 4);
    CHECK(j["coeffs"].size() == 4);
}

TEST_CASE("radius json with and without timing")
{
    RadiusReport r;
    r.q0 = 3;
    r.s = 2;
    r.rho = 3;
    r.method = "oracle";
    r.witness = std::vector<std::uint32_t>{1, 2, 0, 0};
    r.witness_level = "q2";
    r.cross_checks = {{"criterion", 3}};
    r.elapsed_ms = 1.5;
    const auto j = json::parse(radius_json(r));
    CHECK(j["elapsed_ms"] == 1.5);
    CHECK(j["cross_checks"][0]["method"] == "criterion");
    const auto k = json::parse(radius_json(r, false));
    CHECK_FALSE(k.contains("elapsed_ms"));
    r.witness.reset();
    CHECK(json::parse(radius_json(r))["witness"].is_null());
}

TEST_CASE("threshold and classification json")
{
    const auto t = json::parse(thresholds_json(Parity::Odd, 13));
    REQUIRE(t.size() == 6);
    CHECK(t[5]["q0"] == 13);
    CHECK(t[5]["gap"] == json::parse("[3]"));
    CHECK(t[0]["s_star_lower"].is_null());
    CHECK(t[0]["s_prime_star"].is_null());
    const auto e = json::parse(thresholds_json(Parity::Even, 4));
    CHECK_FALSE(e[0].contains("s_prime_star"));
    const auto c = json::parse(classification_json(sweep({2}, 1, 2, Variant::Full)));
    CHECK(c[1]["d"] == 5);
    CHECK(c[1]["perfect"] == true);
}

TEST_CASE("distance json")
{
    DistanceSummary d;
    d.q0 = 3;
    d.s = 1;
    d.variant = Variant::Half;
    const auto j = json::parse(distance_json(d));
    CHECK(j["formula"].is_null());
    CHECK_FALSE(j.contains("exhaustive"));
    d.searched = true;
    const auto k = json::parse(distance_json(d));
    CHECK(k["witness"].is_null());
    CHECK(k["agree"] == true);
}
