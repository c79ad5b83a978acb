/**************************************************************************
 * capi.cpp
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
#include <zetterberg/zetterberg.h>

#include <zetterberg/caps.hpp>
#include <zetterberg/classify.hpp>
#include <zetterberg/code.hpp>
#include <zetterberg/errors.hpp>
#include <zetterberg/gf.hpp>
#include <zetterberg/radius.hpp>
#include <zetterberg/serialize.hpp>
#include <zetterberg/thresholds.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct zt_caps {
    zett::Caps caps;
};

struct zt_field {
    zett::FieldContext ctx;
};

struct zt_code {
    zett::ZetterbergCode code;
};

namespace {

thread_local std::string g_last_error;

zt_status map_code(zett::ErrorCode c)
{
    using zett::ErrorCode;
    switch (c) {
    case ErrorCode::InvalidArgument: return ZT_ERR_INVALID_ARGUMENT;
    case ErrorCode::SizeCapExceeded: return ZT_ERR_SIZE_CAP;
    case ErrorCode::DivisionByZero: return ZT_ERR_DIVISION_BY_ZERO;
    case ErrorCode::EvenCharacteristic: return ZT_ERR_EVEN_CHARACTERISTIC;
    case ErrorCode::PreconditionViolated: return ZT_ERR_PRECONDITION;
    case ErrorCode::FormulaMismatch: return ZT_ERR_FORMULA_MISMATCH;
    case ErrorCode::NotFound: return ZT_ERR_NOT_FOUND;
    case ErrorCode::HalfVariantNeedsOddQ0: return ZT_ERR_HALF_NEEDS_ODD_Q0;
    case ErrorCode::LengthMismatch: return ZT_ERR_LENGTH_MISMATCH;
    case ErrorCode::Undecidable: return ZT_ERR_UNDECIDABLE;
    case ErrorCode::Inconsistent: return ZT_ERR_INCONSISTENT;
    }
    return ZT_ERR_INTERNAL;
}

zt_status fail(zt_status st, std::string msg)
{
    g_last_error = std::move(msg);
    return st;
}

// Runs f, translating exceptions into status codes.
template <class F>
zt_status guarded(F&& f)
{
    try {
        g_last_error.clear();
        f();
        return ZT_OK;
    } catch (const zett::Error& e) {
        return fail(map_code(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(ZT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ZT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ZT_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

zett::Caps caps_of(const zt_caps* c) { return c ? c->caps : zett::Caps{}; }

zett::Variant variant_of(zt_variant v)
{
    if (v == ZT_VARIANT_FULL)
        return zett::Variant::Full;
    if (v == ZT_VARIANT_HALF)
        return zett::Variant::Half;
    zett::raise(zett::ErrorCode::InvalidArgument, "unknown variant");
}

#define ZT_REQUIRE_PTR(p)                                                                                       \
    do {                                                                                                         \
        if (!(p))                                                                                                \
            return fail(ZT_ERR_INVALID_ARGUMENT, #p " must not be NULL");                                        \
    } while (0)

} // namespace

extern "C" {

ZT_API const char* zt_version(void) { return "1.0.0"; }

ZT_API const char* zt_status_name(zt_status status)
{
    switch (status) {
    case ZT_OK: return "OK";
    case ZT_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case ZT_ERR_SIZE_CAP: return "SizeCapExceeded";
    case ZT_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case ZT_ERR_EVEN_CHARACTERISTIC: return "EvenCharacteristic";
    case ZT_ERR_PRECONDITION: return "PreconditionViolated";
    case ZT_ERR_FORMULA_MISMATCH: return "FormulaMismatch";
    case ZT_ERR_NOT_FOUND: return "NotFound";
    case ZT_ERR_HALF_NEEDS_ODD_Q0: return "HalfVariantNeedsOddQ0";
    case ZT_ERR_LENGTH_MISMATCH: return "LengthMismatch";
    case ZT_ERR_UNDECIDABLE: return "Undecidable";
    case ZT_ERR_INCONSISTENT: return "Inconsistent";
    case ZT_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

ZT_API const char* zt_last_error(void) { return g_last_error.c_str(); }

ZT_API void zt_string_free(char* s) { std::free(s); }

ZT_API zt_status zt_caps_new(zt_caps** out)
{
    ZT_REQUIRE_PTR(out);
    return guarded([&] { *out = new zt_caps{}; });
}

ZT_API zt_status zt_caps_from_environment(zt_caps** out)
{
    ZT_REQUIRE_PTR(out);
    return guarded([&] { *out = new zt_caps{zett::caps_from_environment()}; });
}

ZT_API zt_status zt_caps_load_file(zt_caps* caps, const char* path)
{
    ZT_REQUIRE_PTR(caps);
    ZT_REQUIRE_PTR(path);
    return guarded([&] { caps->caps = zett::load_caps_file(path, caps->caps); });
}

ZT_API zt_status zt_caps_set(zt_caps* caps, const char* key, uint64_t value)
{
    ZT_REQUIRE_PTR(caps);
    ZT_REQUIRE_PTR(key);
    if (!zett::set_cap(caps->caps, key, value))
        return fail(ZT_ERR_INVALID_ARGUMENT, std::string("unknown cap '") + key + "'");
    return ZT_OK;
}

ZT_API zt_status zt_caps_get(const zt_caps* caps, const char* key, uint64_t* out)
{
    ZT_REQUIRE_PTR(caps);
    ZT_REQUIRE_PTR(key);
    ZT_REQUIRE_PTR(out);
    auto v = zett::get_cap(caps->caps, key);
    if (!v)
        return fail(ZT_ERR_INVALID_ARGUMENT, std::string("unknown cap '") + key + "'");
    *out = *v;
    return ZT_OK;
}

ZT_API void zt_caps_free(zt_caps* caps) { delete caps; }

ZT_API zt_status zt_field_new(uint32_t p, unsigned m, unsigned s, const zt_caps* caps, zt_field** out)
{
    ZT_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] { *out = new zt_field{zett::make_field(p, m, s, caps_of(caps))}; });
}

ZT_API void zt_field_free(zt_field* field) { delete field; }

ZT_API zt_status zt_field_order(const zt_field* field, uint64_t* out)
{
    ZT_REQUIRE_PTR(field);
    ZT_REQUIRE_PTR(out);
    *out = field->ctx.order();
    return ZT_OK;
}

ZT_API zt_status zt_field_subgroup_order(const zt_field* field, zt_subgroup which, uint64_t* out)
{
    ZT_REQUIRE_PTR(field);
    ZT_REQUIRE_PTR(out);
    return guarded([&] {
        zett::Subgroup g;
        switch (which) {
        case ZT_SUBGROUP_H: g = zett::Subgroup::H; break;
        case ZT_SUBGROUP_FQ_STAR: g = zett::Subgroup::FqStar; break;
        case ZT_SUBGROUP_FQ0_STAR: g = zett::Subgroup::Fq0Star; break;
        default: zett::raise(zett::ErrorCode::InvalidArgument, "unknown subgroup");
        }
        *out = field->ctx.subgroup_order(g);
    });
}

ZT_API zt_status zt_field_to_json(const zt_field* field, int dump, char** out)
{
    ZT_REQUIRE_PTR(field);
    ZT_REQUIRE_PTR(out);
    return guarded([&] { *out = dup_string(zett::field_json(field->ctx, dump != 0)); });
}

ZT_API zt_status zt_code_new(uint64_t q0, unsigned s, zt_variant variant, const zt_caps* caps, zt_code** out)
{
    ZT_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] { *out = new zt_code{zett::build_code(q0, s, variant_of(variant), caps_of(caps))}; });
}

ZT_API void zt_code_free(zt_code* code) { delete code; }

ZT_API zt_status zt_code_length(const zt_code* code, uint64_t* out)
{
    ZT_REQUIRE_PTR(code);
    ZT_REQUIRE_PTR(out);
    *out = code->code.length();
    return ZT_OK;
}

ZT_API zt_status zt_code_dimension(const zt_code* code, uint64_t* out)
{
    ZT_REQUIRE_PTR(code);
    ZT_REQUIRE_PTR(out);
    *out = code->code.dimension();
    return ZT_OK;
}

ZT_API zt_status zt_min_distance_formula(uint64_t q0, unsigned s, zt_variant variant, int* out, int* defined)
{
    ZT_REQUIRE_PTR(out);
    ZT_REQUIRE_PTR(defined);
    return guarded([&] {
        auto d = zett::min_distance_formula(q0, s, variant_of(variant));
        *defined = d.has_value();
        *out = d.value_or(0);
    });
}

ZT_API zt_status zt_code_min_distance_exhaustive(const zt_code* code, int max_weight, int* out, int* found,
                                                 char** witness_json)
{
    ZT_REQUIRE_PTR(code);
    ZT_REQUIRE_PTR(out);
    ZT_REQUIRE_PTR(found);
    if (witness_json)
        *witness_json = nullptr;
    return guarded([&] {
        auto r = zett::min_distance_exhaustive(code->code, max_weight);
        *found = r.distance.has_value();
        *out = r.distance.value_or(0);
        if (witness_json && r.distance)
            *witness_json = dup_string(zett::codeword_json(code->code, r.witness));
    });
}

ZT_API zt_status zt_radius(uint64_t q0, unsigned s, zt_strategy strategy, const zt_caps* caps, int timing,
                           char** out)
{
    ZT_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] {
        zett::Strategy st;
        switch (strategy) {
        case ZT_STRATEGY_AUTO: st = zett::Strategy::Auto; break;
        case ZT_STRATEGY_ORACLE: st = zett::Strategy::Oracle; break;
        case ZT_STRATEGY_CRITERION: st = zett::Strategy::Criterion; break;
        case ZT_STRATEGY_SHORTCUT: st = zett::Strategy::Shortcut; break;
        case ZT_STRATEGY_VERIFY: st = zett::Strategy::Verify; break;
        default: zett::raise(zett::ErrorCode::InvalidArgument, "unknown strategy");
        }
        *out = dup_string(zett::radius_json(zett::covering_radius(q0, s, st, caps_of(caps)), timing != 0));
    });
}

ZT_API zt_status zt_thresholds(zt_parity parity, uint64_t q0_max, zt_format format, char** out)
{
    ZT_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] {
        if (parity != ZT_PARITY_ODD && parity != ZT_PARITY_EVEN)
            zett::raise(zett::ErrorCode::InvalidArgument, "unknown parity");
        const zett::Parity par = parity == ZT_PARITY_ODD ? zett::Parity::Odd : zett::Parity::Even;
        switch (format) {
        case ZT_FORMAT_JSON: *out = dup_string(zett::thresholds_json(par, q0_max)); break;
        case ZT_FORMAT_CSV: *out = dup_string(zett::thresholds_csv(par, q0_max)); break;
        default: zett::raise(zett::ErrorCode::InvalidArgument, "thresholds support json and csv");
        }
    });
}

ZT_API zt_status zt_classify(uint64_t q0, unsigned s_max, zt_variant variant, const zt_caps* caps,
                             zt_format format, char** out)
{
    ZT_REQUIRE_PTR(out);
    *out = nullptr;
    return guarded([&] {
        const auto rows = zett::sweep({q0}, 1, s_max, variant_of(variant), caps_of(caps));
        switch (format) {
        case ZT_FORMAT_JSON: *out = dup_string(zett::classification_json(rows)); break;
        case ZT_FORMAT_CSV: *out = dup_string(zett::classification_csv(rows)); break;
        case ZT_FORMAT_MARKDOWN: *out = dup_string(zett::classification_markdown(rows)); break;
        default: zett::raise(zett::ErrorCode::InvalidArgument, "unknown format");
        }
    });
}

} // extern "C"
