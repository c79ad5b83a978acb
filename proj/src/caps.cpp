/**************************************************************************
 * caps.cpp
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
#include <zetterberg/caps.hpp>
#include <zetterberg/errors.hpp>

#include <cstdlib>
#include <fstream>

namespace zett {

namespace {

std::string strip(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_value(const std::string& key, const std::string& text)
{
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(text, &used, 0);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    raise(ErrorCode::InvalidArgument, "config: bad value for " + key + ": '" + text + "'");
}

std::uint64_t* slot(Caps& caps, std::string_view key)
{
    if (key == "max_ambient_order")
        return &caps.max_ambient_order;
    if (key == "table_cap")
        return &caps.table_cap;
    if (key == "oracle_cap")
        return &caps.oracle_cap;
    if (key == "scan_cap")
        return &caps.scan_cap;
    if (key == "exhaustive_len_cap")
        return &caps.exhaustive_len_cap;
    if (key == "weight3_q_cap")
        return &caps.weight3_q_cap;
    return nullptr;
}

} // namespace

bool set_cap(Caps& caps, std::string_view key, std::uint64_t value)
{
    std::uint64_t* p = slot(caps, key);
    if (p)
        *p = value;
    return p != nullptr;
}

std::optional<std::uint64_t> get_cap(const Caps& caps, std::string_view key)
{
    Caps copy = caps;
    if (const std::uint64_t* p = slot(copy, key))
        return *p;
    return std::nullopt;
}

Caps load_caps_file(const std::string& path, Caps caps)
{
    std::ifstream in(path);
    if (!in)
        raise(ErrorCode::InvalidArgument, "config: cannot open " + path);
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = strip(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            raise(ErrorCode::InvalidArgument, "config: line " + std::to_string(lineno) + " lacks '='");
        const std::string key = strip(line.substr(0, eq));
        const std::uint64_t v = parse_value(key, strip(line.substr(eq + 1)));
        if (!set_cap(caps, key, v))
            raise(ErrorCode::InvalidArgument, "config: unknown key '" + key + "'");
    }
    return caps;
}

Caps caps_from_environment()
{
    const char* path = std::getenv("ZETT_CONFIG");
    if (path == nullptr || *path == '\0')
        return Caps{};
    return load_caps_file(path);
}

} // namespace zett
