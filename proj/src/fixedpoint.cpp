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

#include "dctapprox/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace dctapprox {

bool valid_word_length(int bits) {
    return bits == 4 || bits == 8 || bits == 12 || bits == 16;
}

std::vector<IntVec8> test_vector_batch(int count, std::uint64_t seed, int word_length_bits) {
    if (!valid_word_length(word_length_bits))
        throw ParameterError("word length must be one of 4, 8, 12, 16");
    if (count < 0) throw ParameterError("vector count must be non-negative");

    SplitMix64 rng(seed);
    const std::uint64_t mask = (std::uint64_t(1) << word_length_bits) - 1;
    const std::uint64_t sign_bit = std::uint64_t(1) << (word_length_bits - 1);

    std::vector<IntVec8> batch(static_cast<std::size_t>(count));
    for (auto& vec : batch)
        for (auto& v : vec) {
            const std::uint64_t bits = rng.next() & mask;
            v = (bits & sign_bit) ? (long long)bits - (long long)(mask + 1) : (long long)bits;
        }
    return batch;
}

namespace {

long long floor_div2(long long v) { return v >> 1; }  // rounds toward -inf

}  // namespace

IntegerEval eval_integer(const FlowGraph& flow, const IntVec8& x) {
    IntegerEval eval;
    IntVec8 cur = x;
    int stage_index = 0;
    for (const SparseStage& stage : flow.stages) {
        IntVec8 next{};
        for (const StageTerm& t : stage.terms) {
            long long term;
            switch (t.num2) {
                case 2: term = cur[t.col]; break;
                case -2: term = -cur[t.col]; break;
                case 4: term = cur[t.col] << 1; break;
                case -4: term = -(cur[t.col] << 1); break;
                default:  // +-1/2: floored halving, flagged when inexact
                    if (cur[t.col] & 1) eval.inexact_shifts.push_back({stage_index, t.row});
                    term = floor_div2((long long)t.num2 * cur[t.col]);
                    break;
            }
            next[t.row] += term;
        }
        cur = next;
        long long peak = 0;
        for (long long v : cur) peak = std::max(peak, std::abs(v));
        eval.stage_peak.push_back(peak);
        ++stage_index;
    }
    eval.output = flow.perm.apply(cur);
    return eval;
}

IntVec8 dense_integer_reference(const TransformSpec& spec, const IntVec8& x) {
    IntVec8 out{};
    for (int i = 0; i < kN; ++i) {
        long long twice = 0;
        for (int j = 0; j < kN; ++j) twice += (long long)spec.t_num2[i][j] * x[j];
        out[i] = floor_div2(twice);
    }
    return out;
}

StageWidths word_growth(const FlowGraph& flow, int word_length_bits) {
    if (!valid_word_length(word_length_bits))
        throw ParameterError("word length must be one of 4, 8, 12, 16");

    const long long in_lo = -(1LL << (word_length_bits - 1));
    const long long in_hi = (1LL << (word_length_bits - 1)) - 1;

    StageWidths report;
    Rational8x8 composed = Rational8x8::identity();
    for (const SparseStage& stage : flow.stages) {
        composed = rational_matmul(stage.to_rational(), composed);
        composed.reduce();
        const long long den = 1LL << composed.log2_den;

        // Worst case per lane from the L1 norm of the composed row: the
        // extremes are hit by driving every input to the matching end of
        // its range.
        long long worst_lo = 0, worst_hi = 0;
        for (int r = 0; r < kN; ++r) {
            long long l1 = 0;
            for (int c = 0; c < kN; ++c) l1 += std::abs(composed.num[r][c]);
            // floor of the rational bounds; a staged floor-halving lands on
            // floor(lo) at worst, never below it
            const long long lo = -((l1 * -in_lo + den - 1) / den);
            const long long hi = (l1 * in_hi) / den;
            worst_lo = std::min(worst_lo, lo);
            worst_hi = std::max(worst_hi, hi);
        }
        int bits = 1;
        while (worst_lo < -(1LL << (bits - 1)) || worst_hi > (1LL << (bits - 1)) - 1) ++bits;
        report.bits.push_back(bits);
        report.max_bits = std::max(report.max_bits, bits);
    }
    return report;
}

VerifyStats verify_flow(const TransformSpec& spec, int word_length_bits, int count,
                        std::uint64_t seed) {
    VerifyStats stats;
    stats.transform = spec.name;
    stats.word_length = word_length_bits;
    stats.n_vectors = count;

    const FlowGraph flow = flow_graph(spec);
    const StageWidths widths = word_growth(flow, word_length_bits);
    stats.max_stage_width = widths.max_bits;

    std::vector<long long> stage_bound(flow.stages.size());
    for (std::size_t s = 0; s < flow.stages.size(); ++s)
        stage_bound[s] = (1LL << (widths.bits[s] - 1));  // |v| <= 2^(bits-1)

    const std::vector<IntVec8> batch = test_vector_batch(count, seed, word_length_bits);
    for (const IntVec8& x : batch) {
        const IntegerEval eval = eval_integer(flow, x);
        stats.inexact_shift_events += (long long)eval.inexact_shifts.size();
        if (eval.output != dense_integer_reference(spec, x)) ++stats.mismatches;
        for (std::size_t s = 0; s < eval.stage_peak.size(); ++s)
            if (eval.stage_peak[s] > stage_bound[s]) ++stats.peak_bound_violations;
    }
    return stats;
}

}  // namespace dctapprox
