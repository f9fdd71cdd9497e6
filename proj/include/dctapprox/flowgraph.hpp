/*
 * Copyright 2026 The dctapprox Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DCTAPPROX_FLOWGRAPH_HPP
#define DCTAPPROX_FLOWGRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dctapprox/common.hpp"
#include "dctapprox/linalg.hpp"

namespace dctapprox {

/// One multiplier-free term of a sparse stage. Coefficients are stored as
/// twice their value, so num2 is 1 for 1/2, 2 for 1, 4 for 2.
struct StageTerm {
    std::uint8_t row = 0;
    std::uint8_t col = 0;
    std::int8_t num2 = 0;
};

/// Sparse 8x8 matrix whose nonzeros are drawn from {+-1/2, +-1, +-2}.
struct SparseStage {
    std::vector<StageTerm> terms;  // sorted by (row, col), no duplicates

    static SparseStage from_table(const int (&num2_table)[8][8]);
    Rational8x8 to_rational() const;
};

/// Lane reordering with zero arithmetic cost. dest[i] is the output position
/// of input lane i.
struct Permutation {
    std::array<std::uint8_t, 8> dest{0, 1, 2, 3, 4, 5, 6, 7};

    /// Build from 1-based cycles, each read as "the value at position i moves
    /// to position j" for consecutive cycle elements.
    static Permutation from_cycles(std::initializer_list<std::initializer_list<int>> cycles);

    template <class T>
    std::array<T, 8> apply(const std::array<T, 8>& x) const {
        std::array<T, 8> out{};
        for (int i = 0; i < 8; ++i) out[dest[i]] = x[i];
        return out;
    }
};

/// Additions-and-shifts realization of a transform matrix: sparse stages
/// applied in order, then a free output permutation.
struct FlowGraph {
    std::vector<SparseStage> stages;
    Permutation perm;
};

/// Evaluate the flow on a real vector.
Vec8 apply_flow(const FlowGraph& flow, const Vec8& x);

/// Exact matrix realized by the flow, composed over rationals.
Rational8x8 flow_to_matrix(const FlowGraph& flow);

/// Arithmetic cost of the flow. A stage row with k nonzeros costs k-1
/// additions; every coefficient of magnitude 2 or 1/2 costs one shift;
/// permutations are free.
OpCount count_ops(const FlowGraph& flow);

}  // namespace dctapprox

#endif
