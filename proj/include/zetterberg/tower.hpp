/**************************************************************************
 * tower.hpp
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

#include <zetterberg/gf.hpp>

#include <optional>
#include <vector>

namespace zett {

struct LevelPair {
    Level from = Level::Q2;
    Level to = Level::Q;
};

// Degree of a level over F_p.
unsigned level_degree(const FieldContext& ctx, Level level);

// Tr and N from pair.from down to pair.to; x is taken to lie in pair.from.
FieldElement trace(const FieldContext& ctx, FieldElement x, LevelPair pair);
FieldElement norm(const FieldContext& ctx, FieldElement x, LevelPair pair);

// Quadratic character of the subfield named by level: 0, 1 or -1.
int quadratic_character(const FieldContext& ctx, FieldElement x, Level level);

inline bool in_subgroup(const FieldContext& ctx, FieldElement x, Subgroup tag)
{
    return ctx.in_subgroup(x, tag);
}

// Membership in F_q0 * H. Zero counts as a member (take c = 0).
bool in_scaled_H(const FieldContext& ctx, FieldElement y);

struct ScaledHSplit {
    FieldElement c; // in F_q0^*
    FieldElement h; // in H
};

// y = c * h, if y is a nonzero element of F_q0 * H.
std::optional<ScaledHSplit> split_scaled_H(const FieldContext& ctx, FieldElement y);

// The trace map as a precomputed F_p-linear map.
class TraceMap {
public:
    TraceMap(const FieldContext& ctx, LevelPair pair);

    FieldElement operator()(FieldElement x) const { return map_.apply(x); }

private:
    LinearMap map_;
};

// Bitset of the nonzero squares of one level, indexed by arena index.
class SquareSet {
public:
    SquareSet(const FieldContext& ctx, Level level);

    bool contains(FieldElement x) const
    {
        return (bits_[x.index >> 6] >> (x.index & 63)) & 1;
    }
    int chi(FieldElement x) const { return x.index == 0 ? 0 : (contains(x) ? 1 : -1); }

private:
    std::vector<std::uint64_t> bits_;
};

} // namespace zett
