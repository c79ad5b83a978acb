/**************************************************************************
 * serialize.cpp
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
#include <zetterberg/serialize.hpp>

#include <json.hpp>

namespace zett {

namespace {

using nlohmann::ordered_json;

ordered_json digits(const FieldContext& ctx, FieldElement x) { return ctx.coeffs(x); }

ordered_json opt_int(const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json opt_uint(const std::optional<unsigned>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

} // namespace

std::string field_json(const FieldContext& ctx, bool dump)
{
    const FieldSpec& sp = ctx.spec();
    ordered_json j;
    j["p"] = sp.p;
    j["m"] = sp.m;
    j["s"] = sp.s;
    j["modulus"] = sp.modulus;
    j["generator"] = digits(ctx, ctx.generator());
    ordered_json sub;
    if (ctx.arena() == Arena::Ambient)
        sub["H"] = ctx.subgroup_order(Subgroup::H);
    sub["Fq_star"] = ctx.subgroup_order(Subgroup::FqStar);
    sub["Fq0_star"] = ctx.subgroup_order(Subgroup::Fq0Star);
    j["subgroup_orders"] = sub;
    if (dump) {
        j["arena"] = ctx.arena() == Arena::Ambient ? "ambient" : "base";
        j["degree"] = ctx.degree();
        j["order"] = ctx.order();
        j["q0"] = ctx.q0();
        j["q"] = ctx.q();
        ordered_json fac = ordered_json::array();
        for (const PrimePower& pp : ctx.group_order_factors())
            fac.push_back({pp.prime, pp.exponent});
        j["group_order_factors"] = fac;
    }
    return j.dump();
}

std::string codeword_json(const ZetterbergCode& code, const Codeword& word)
{
    ordered_json j;
    j["q0"] = code.q0();
    j["s"] = code.s();
    j["variant"] = variant_name(code.variant());
    j["support"] = word.support();
    ordered_json coeffs = ordered_json::array();
    for (std::size_t i : word.support())
        coeffs.push_back(digits(code.ctx(), word.coeffs[i]));
    j["coeffs"] = coeffs;
    return j.dump();
}

std::string radius_json(const RadiusReport& r, bool timing)
{
    ordered_json j;
    j["q0"] = r.q0;
    j["s"] = r.s;
    j["rho"] = r.rho;
    j["method"] = r.method;
    j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
    j["witness_level"] = r.witness ? ordered_json(r.witness_level) : ordered_json(nullptr);
    ordered_json checks = ordered_json::array();
    for (const CrossCheck& c : r.cross_checks)
        checks.push_back({{"method", c.method}, {"rho", c.rho}});
    j["cross_checks"] = checks;
    if (timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::string classification_json(const std::vector<ClassificationReport>& rows)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["q0"] = r.q0;
        j["s"] = r.s;
        j["variant"] = variant_name(r.variant);
        j["length"] = r.length;
        j["dimension"] = r.dimension;
        j["d"] = opt_int(r.d);
        j["rho"] = opt_int(r.rho);
        j["rho_method"] = r.rho_method;
        j["decided"] = r.decided;
        j["perfect"] = r.perfect;
        j["quasi_perfect"] = r.quasi_perfect;
        j["maximal"] = r.maximal;
        j["rule"] = r.rule;
        if (!r.error.empty())
            j["error"] = r.error;
        arr.push_back(j);
    }
    return arr.dump();
}

std::string thresholds_json(Parity parity, std::uint64_t q0_max)
{
    ordered_json arr = ordered_json::array();
    for (std::uint64_t q0 : prime_powers(parity, q0_max)) {
        const ThresholdReport r = threshold_report(q0);
        ordered_json j;
        j["q0"] = q0;
        j["parity"] = parity_name(r.parity);
        j["s_star_lower"] = opt_uint(r.s_star_lower);
        j["s_star_upper"] = r.s_star_upper;
        if (parity == Parity::Odd)
            j["s_prime_star"] = opt_uint(r.s_prime_star);
        j["gap"] = r.gap;
        arr.push_back(j);
    }
    return arr.dump();
}

std::string distance_json(const DistanceSummary& d)
{
    ordered_json j;
    j["q0"] = d.q0;
    j["s"] = d.s;
    j["variant"] = variant_name(d.variant);
    j["formula"] = opt_int(d.formula);
    if (d.searched) {
        j["exhaustive"] = opt_int(d.exhaustive);
        j["agree"] = d.agree;
        j["witness"] = d.witness_json.empty() ? ordered_json(nullptr) : ordered_json::parse(d.witness_json);
    }
    return j.dump();
}

} // namespace zett
