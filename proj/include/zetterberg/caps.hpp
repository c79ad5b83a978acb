/**************************************************************************
 * caps.hpp
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
#include <string_view>

namespace zett {

// Work limits. Exceeding one is always reported as SizeCapExceeded.
struct Caps {
    std::uint64_t max_ambient_order = std::uint64_t{1} << 32;
    std::uint64_t table_cap = std::uint64_t{1} << 24;   // discrete-log tables
    std::uint64_t oracle_cap = std::uint64_t{1} << 20;  // q^2 for the BFS oracle
    std::uint64_t scan_cap = std::uint64_t{1} << 28;    // criterion evaluations
    std::uint64_t exhaustive_len_cap = 64;              // weight >= 4 search
    std::uint64_t weight3_q_cap = std::uint64_t{1} << 16;
};

// Named access by config key; false / nullopt for unknown keys.
bool set_cap(Caps& caps, std::string_view key, std::uint64_t value);
std::optional<std::uint64_t> get_cap(const Caps& caps, std::string_view key);

// Parses key=value lines; '#' starts a comment. Unknown keys are rejected.
Caps load_caps_file(const std::string& path, Caps base = {});

// Defaults, overridden by the file named in ZETT_CONFIG when set.
Caps caps_from_environment();

} // namespace zett
