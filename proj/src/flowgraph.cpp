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

#include "dctapprox/flowgraph.hpp"

#include <cassert>
#include <cstdlib>

namespace dctapprox {

SparseStage SparseStage::from_table(const int (&num2_table)[8][8]) {
    SparseStage stage;
    for (int r = 0; r < kN; ++r)
        for (int c = 0; c < kN; ++c) {
            const int v = num2_table[r][c];
            if (v == 0) continue;
            assert(std::abs(v) == 1 || std::abs(v) == 2 || std::abs(v) == 4);
            stage.terms.push_back({std::uint8_t(r), std::uint8_t(c), std::int8_t(v)});
        }
    return stage;
}

Rational8x8 SparseStage::to_rational() const {
    Rational8x8 m;
    m.log2_den = 1;
    for (const StageTerm& t : terms) m.num[t.row][t.col] = t.num2;
    return m;
}

Permutation Permutation::from_cycles(std::initializer_list<std::initializer_list<int>> cycles) {
    Permutation p;
    for (const auto& cycle : cycles) {
        const int n = int(cycle.size());
        auto it = cycle.begin();
        for (int k = 0; k < n; ++k) {
            const int from = *(it + k) - 1;
            const int to = *(it + (k + 1) % n) - 1;
            assert(from >= 0 && from < kN && to >= 0 && to < kN);
            p.dest[from] = std::uint8_t(to);
        }
    }
    return p;
}

Vec8 apply_flow(const FlowGraph& flow, const Vec8& x) {
    Vec8 cur = x;
    for (const SparseStage& stage : flow.stages) {
        Vec8 next{};
        for (const StageTerm& t : stage.terms) next[t.row] += (t.num2 / 2.0) * cur[t.col];
        cur = next;
    }
    return flow.perm.apply(cur);
}

Rational8x8 flow_to_matrix(const FlowGraph& flow) {
    Rational8x8 m = Rational8x8::identity();
    for (const SparseStage& stage : flow.stages) m = rational_matmul(stage.to_rational(), m);
    Rational8x8 out;
    out.log2_den = m.log2_den;
    for (int i = 0; i < kN; ++i) out.num[flow.perm.dest[i]] = m.num[i];
    out.reduce();
    return out;
}

OpCount count_ops(const FlowGraph& flow) {
    OpCount ops;
    for (const SparseStage& stage : flow.stages) {
        std::array<int, 8> nonzeros{};
        for (const StageTerm& t : stage.terms) {
            ++nonzeros[t.row];
            const int mag2 = std::abs(t.num2);
            if (mag2 == 4 || mag2 == 1) ++ops.shifts;  // x2 or x1/2
        }
        for (int n : nonzeros)
            if (n > 1) ops.adds += n - 1;
    }
    return ops;
}

}  // namespace dctapprox
