/**************************************************************************
 * zett_cli.cpp
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
// Command-line front end. Talks to the library only through zetterberg.h.
#include <zetterberg/zetterberg.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kInconsistent = 1, kUsage = 2, kCap = 3, kUndecidable = 4 };

int exit_code(zt_status st)
{
    switch (st) {
    case ZT_OK: return kOk;
    case ZT_ERR_SIZE_CAP: return kCap;
    case ZT_ERR_UNDECIDABLE: return kUndecidable;
    case ZT_ERR_INCONSISTENT:
    case ZT_ERR_FORMULA_MISMATCH:
    case ZT_ERR_INTERNAL: return kInconsistent;
    default: return kUsage;
    }
}

// Thrown to unwind to main with an exit code after printing a message.
struct Failure {
    int code;
};

void check(zt_status st)
{
    if (st == ZT_OK)
        return;
    std::cerr << "zett: " << zt_status_name(st) << ": " << zt_last_error() << '\n';
    throw Failure{exit_code(st)};
}

struct Owned {
    char* p = nullptr;
    ~Owned() { zt_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

using CapsPtr = std::unique_ptr<zt_caps, decltype(&zt_caps_free)>;

CapsPtr load_caps(const std::string& config)
{
    zt_caps* raw = nullptr;
    check(zt_caps_from_environment(&raw));
    CapsPtr caps(raw, &zt_caps_free);
    if (!config.empty())
        check(zt_caps_load_file(caps.get(), config.c_str()));
    return caps;
}

zt_variant to_variant(const std::string& v) { return v == "half" ? ZT_VARIANT_HALF : ZT_VARIANT_FULL; }

std::string cell(const ordered_json& v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

// Renders a flat JSON object as a two-line CSV or a one-row Markdown table.
std::string flat_table(const ordered_json& obj, const std::string& format)
{
    std::string head, sep, row;
    bool first = true;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::string value = cell(it.value());
        if (format == "csv") {
            if (value.find_first_of(",\"") != std::string::npos) {
                std::string quoted = "\"";
                for (char c : value)
                    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
                value = quoted + "\"";
            }
            head += (first ? "" : ",") + it.key();
            row += (first ? "" : ",") + value;
        } else {
            head += "| " + it.key() + " ";
            sep += "|---";
            row += "| " + value + " ";
        }
        first = false;
    }
    if (format == "csv")
        return head + "\n" + row + "\n";
    return head + "|\n" + sep + "|\n" + row + "|\n";
}

zt_format parse_format(const std::string& f)
{
    if (f == "csv")
        return ZT_FORMAT_CSV;
    if (f == "markdown")
        return ZT_FORMAT_MARKDOWN;
    return ZT_FORMAT_JSON;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized Zetterberg codes: fields, distances, covering radii, thresholds"};
    app.require_subcommand(1);
    std::string config;
    bool no_timing = false;
    app.add_option("--config", config, "caps file (key=value); ZETT_CONFIG is read first");
    app.add_flag("--no-timing", no_timing, "omit elapsed times for byte-stable output");
    app.set_version_flag("--version", std::string(zt_version()));

    const auto formats = CLI::IsMember({"json", "csv", "markdown"});

    auto* field = app.add_subcommand("field", "build the ambient field F_{p^(2sm)}");
    unsigned fp = 0, fm = 1, fs = 1;
    bool dump = false;
    field->add_option("--p", fp, "characteristic")->required();
    field->add_option("--m", fm, "q0 = p^m")->required();
    field->add_option("--s", fs, "q = q0^s")->required();
    field->add_flag("--dump", dump, "include degree, orders and the group-order factorization");

    auto* radius = app.add_subcommand("radius", "covering radius of C_s(q0)");
    std::uint64_t rq0 = 0;
    unsigned rs = 0;
    std::string method = "auto", rformat = "json";
    radius->add_option("--q0", rq0)->required();
    radius->add_option("--s", rs)->required();
    radius->add_option("--method", method)->check(CLI::IsMember({"auto", "oracle", "criterion", "shortcut", "verify"}));
    radius->add_option("--format", rformat)->check(formats);

    auto* mindist = app.add_subcommand("mindist", "minimum distance by formula, optionally by search");
    std::uint64_t mq0 = 0;
    unsigned ms = 0;
    std::string mvariant = "full", mformat = "json";
    bool exhaustive = false;
    mindist->add_option("--q0", mq0)->required();
    mindist->add_option("--s", ms)->required();
    mindist->add_option("--variant", mvariant)->check(CLI::IsMember({"full", "half"}))->required();
    mindist->add_flag("--exhaustive", exhaustive, "also search and require agreement");
    mindist->add_option("--format", mformat)->check(formats);

    auto* thresholds = app.add_subcommand("thresholds", "threshold table over prime powers");
    std::string parity, tformat = "csv";
    std::uint64_t q0_max = 0;
    thresholds->add_option("--parity", parity)->check(CLI::IsMember({"odd", "even"}))->required();
    thresholds->add_option("--q0-max", q0_max)->required();
    thresholds->add_option("--format", tformat)->check(CLI::IsMember({"csv", "json"}));

    auto* classify = app.add_subcommand("classify", "perfect / quasi-perfect / maximal verdicts");
    std::uint64_t cq0 = 0;
    unsigned s_max = 0;
    std::string cvariant = "full", cformat = "markdown";
    classify->add_option("--q0", cq0)->required();
    classify->add_option("--s-max", s_max)->required();
    classify->add_option("--variant", cvariant)->check(CLI::IsMember({"full", "half"}))->required();
    classify->add_option("--format", cformat)->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const CapsPtr caps = load_caps(config);
        if (*field) {
            zt_field* raw = nullptr;
            check(zt_field_new(fp, fm, fs, caps.get(), &raw));
            std::unique_ptr<zt_field, decltype(&zt_field_free)> f(raw, &zt_field_free);
            Owned js;
            check(zt_field_to_json(f.get(), dump ? 1 : 0, &js.p));
            std::cout << js.str() << '\n';
        } else if (*radius) {
            static const std::map<std::string, zt_strategy> strategies{
                {"auto", ZT_STRATEGY_AUTO},         {"oracle", ZT_STRATEGY_ORACLE},
                {"criterion", ZT_STRATEGY_CRITERION}, {"shortcut", ZT_STRATEGY_SHORTCUT},
                {"verify", ZT_STRATEGY_VERIFY}};
            Owned js;
            check(zt_radius(rq0, rs, strategies.at(method), caps.get(), no_timing ? 0 : 1, &js.p));
            if (rformat == "json") {
                std::cout << js.str() << '\n';
            } else {
                ordered_json j = ordered_json::parse(js.str());
                std::string checks;
                for (const auto& c : j["cross_checks"])
                    checks += (checks.empty() ? "" : ";") + c["method"].get<std::string>() + "=" +
                              std::to_string(c["rho"].get<int>());
                j["cross_checks"] = checks;
                std::cout << flat_table(j, rformat);
            }
        } else if (*mindist) {
            const zt_variant v = to_variant(mvariant);
            int formula = 0, defined = 0;
            check(zt_min_distance_formula(mq0, ms, v, &formula, &defined));
            ordered_json j;
            j["q0"] = mq0;
            j["s"] = ms;
            j["variant"] = mvariant;
            j["formula"] = defined ? ordered_json(formula) : ordered_json(nullptr);
            bool agree = true;
            if (exhaustive) {
                zt_code* raw = nullptr;
                check(zt_code_new(mq0, ms, v, caps.get(), &raw));
                std::unique_ptr<zt_code, decltype(&zt_code_free)> code(raw, &zt_code_free);
                int found_d = 0, found = 0;
                Owned witness;
                check(zt_code_min_distance_exhaustive(code.get(), defined ? formula : 2, &found_d, &found,
                                                      &witness.p));
                agree = defined ? (found && found_d == formula) : !found;
                j["exhaustive"] = found ? ordered_json(found_d) : ordered_json(nullptr);
                j["agree"] = agree;
                j["witness"] = witness.p ? ordered_json::parse(witness.str()) : ordered_json(nullptr);
            }
            if (mformat == "json") {
                std::cout << j.dump() << '\n';
            } else {
                if (j.contains("witness"))
                    j["witness"] = j["witness"].is_null() ? "" : j["witness"]["support"].dump();
                std::cout << flat_table(j, mformat);
            }
            if (!agree) {
                std::cerr << "zett: Inconsistent: formula and exhaustive search disagree\n";
                return kInconsistent;
            }
        } else if (*thresholds) {
            Owned out;
            check(zt_thresholds(parity == "odd" ? ZT_PARITY_ODD : ZT_PARITY_EVEN, q0_max,
                                tformat == "json" ? ZT_FORMAT_JSON : ZT_FORMAT_CSV, &out.p));
            std::cout << out.str();
            if (tformat == "json")
                std::cout << '\n';
        } else if (*classify) {
            Owned out;
            check(zt_classify(cq0, s_max, to_variant(cvariant), caps.get(), parse_format(cformat), &out.p));
            std::cout << out.str();
            if (cformat == "json")
                std::cout << '\n';
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return kOk;
}
