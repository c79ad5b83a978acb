/**************************************************************************
 * classify.cpp
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
#include <zetterberg/errors.hpp>
#include <zetterberg/radius.hpp>
#include <zetterberg/thresholds.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace zett {

namespace {

using boost::multiprecision::cpp_int;

std::string summary_row(std::uint64_t q0, unsigned s, Variant variant)
{
    if (variant == Variant::Full) {
        if (q0 % 2)
            return "derived";
        if (s == 1)
            return "even q0, s=1";
        if (q0 == 2)
            return s == 2 ? "q0=2, s=2" : (s % 2 == 0 ? "q0=2, even s>=4" : "derived");
        if (s == 2)
            return "q0>=4, s=2";
        if (s % 2 == 0)
            return "q0>=4, even s>=4";
        return 2 * static_cast<std::uint64_t>(s) <= q0 ? "q0>=4, odd 3<=s<=q0/2" : "derived";
    }
    if (q0 == 3)
        return s == 1 ? "trivial" : "q0=3, s>=2";
    if (s == 1)
        return "q0>=5, s=1";
    if (s % 2 == 0)
        return "q0>=5, even s>=2";
    return sodd_holds(q0, s) ? "q0>=5, odd 3<=s<=s^*" : "derived";
}

void set_shape(ClassificationReport& r)
{
    cpp_int q = 1;
    for (unsigned i = 0; i < r.s; ++i)
        q *= r.q0;
    cpp_int len = q + 1;
    if (r.variant == Variant::Half)
        len /= 2;
    r.length = len.str();
    cpp_int dim = len - 2 * r.s;
    r.dimension = dim.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string verdict(const ClassificationReport& r)
{
    if (!r.decided)
        return "";
    if (r.perfect)
        return "perfect";
    if (r.quasi_perfect)
        return "quasi-perfect";
    return "-";
}

} // namespace

ClassificationReport classify(std::uint64_t q0, unsigned s, Variant variant, const Caps& caps)
{
    auto form = prime_power_form(q0);
    require(form.has_value(), ErrorCode::InvalidArgument, "q0 must be a prime power");
    require(s >= 1, ErrorCode::InvalidArgument, "s must be positive");
    if (variant == Variant::Half && form->p == 2)
        raise(ErrorCode::HalfVariantNeedsOddQ0, "the half code needs odd q0");

    ClassificationReport r;
    r.q0 = q0;
    r.s = s;
    r.variant = variant;
    set_shape(r);
    r.rule = summary_row(q0, s, variant);
    r.d = min_distance_formula(q0, s, variant);

    if (!r.d) {
        // The zero code of length 2 covers nothing but itself.
        r.rho = 2;
        r.rho_method = "trivial";
        r.decided = true;
        return r;
    }
    // Half and full codes share rho for odd q0.
    const RadiusReport rad = covering_radius(q0, s, Strategy::Auto, caps);
    r.rho = rad.rho;
    r.rho_method = rad.method;
    r.decided = true;
    const int t = (*r.d - 1) / 2;
    r.perfect = *r.rho == t;
    r.quasi_perfect = *r.rho == t + 1;
    r.maximal = *r.rho <= *r.d - 1;
    return r;
}

std::vector<ClassificationReport> sweep(const std::vector<std::uint64_t>& q0s, unsigned s_min, unsigned s_max,
                                        Variant variant, const Caps& caps)
{
    std::vector<ClassificationReport> out;
    for (std::uint64_t q0 : q0s) {
        for (unsigned s = s_min; s <= s_max; ++s) {
            try {
                out.push_back(classify(q0, s, variant, caps));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::HalfVariantNeedsOddQ0)
                    throw;
                ClassificationReport r;
                r.q0 = q0;
                r.s = s;
                r.variant = variant;
                r.d = min_distance_formula(q0, s, variant);
                r.rule = "open gap";
                if (e.code() != ErrorCode::Undecidable)
                    r.error = std::string(error_code_name(e.code())) + ": " + e.what();
                set_shape(r);
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::string classification_markdown(const std::vector<ClassificationReport>& rows)
{
    std::ostringstream os;
    os << "| q0 | s | variant | length | dimension | d | rho | perfect/quasi-perfect | maximal | rule |\n"
       << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        os << "| " << r.q0 << " | " << r.s << " | " << variant_name(r.variant) << " | " << r.length << " | "
           << r.dimension << " | " << opt(r.d) << " | " << opt(r.rho) << " | " << verdict(r) << " | "
           << (r.decided ? (r.maximal ? "yes" : "no") : "") << " | " << r.rule << " |\n";
    }
    return os.str();
}

std::string classification_csv(const std::vector<ClassificationReport>& rows)
{
    std::ostringstream os;
    os << "q0,s,variant,length,dimension,d,rho,perfect,quasi_perfect,maximal,rule\n";
    for (const auto& r : rows) {
        os << r.q0 << ',' << r.s << ',' << variant_name(r.variant) << ',' << r.length << ',' << r.dimension << ','
           << opt(r.d) << ',' << opt(r.rho) << ',';
        if (r.decided)
            os << yes_no(r.perfect) << ',' << yes_no(r.quasi_perfect) << ',' << yes_no(r.maximal);
        else
            os << ",,";
        os << ',' << '"' << r.rule << '"' << '\n';
    }
    return os.str();
}

} // namespace zett
