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

#ifndef DCTAPPROX_FIXEDPOINT_HPP
#define DCTAPPROX_FIXEDPOINT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dctapprox/flowgraph.hpp"
#include "dctapprox/transform.hpp"

namespace dctapprox {

using IntVec8 = std::array<long long, 8>;

/// splitmix64: the 64-bit state walks by the golden-gamma increment and each
/// step is finalized by two xor-shift-multiplies. Tiny, portable, and the
/// output stream for a given seed is fixed for good.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// Valid datapath word lengths for the verification protocol.
bool valid_word_length(int bits);  // {4, 8, 12, 16}

/// Deterministic batch of signed test vectors, uniform over the full
/// [-2^(L-1), 2^(L-1)-1] range: each entry is the low L bits of one
/// splitmix64 draw, sign-extended. Same seed, same batch, bit for bit.
std::vector<IntVec8> test_vector_batch(int count, std::uint64_t seed, int word_length_bits);

/// A halving applied to an odd value: the result lost the remainder.
struct InexactShift {
    int stage = 0;
    int lane = 0;
};

struct IntegerEval {
    IntVec8 output{};
    std::vector<InexactShift> inexact_shifts;
    std::vector<long long> stage_peak;  // max |value| seen after each stage
};

/// Bit-true integer evaluation of a flow. Terms with coefficient +-1/2
/// floor-divide by two (arithmetic shift) and record an InexactShift when
/// the operand is odd; all other arithmetic is exact with unbounded growth.
IntegerEval eval_integer(const FlowGraph& flow, const IntVec8& x);

/// Dense reference for the same datapath: y = floor((2T * x) / 2) per row.
/// Rows with integer coefficients are exact; rows carrying a single +-1/2
/// term floor exactly like the staged evaluation does (every catalog
/// transform has at most one halving per output lane).
IntVec8 dense_integer_reference(const TransformSpec& spec, const IntVec8& x);

struct StageWidths {
    std::vector<int> bits;  // per stage, minimal signed width for the worst case
    int max_bits = 0;
};

/// Worst-case intermediate widths over the full L-bit input range, from the
/// per-lane L1 norms of the composed stage matrices - a bound, not a sample.
StageWidths word_growth(const FlowGraph& flow, int word_length_bits);

struct VerifyStats {
    std::string transform;
    int word_length = 0;
    int n_vectors = 0;
    long long mismatches = 0;
    long long inexact_shift_events = 0;
    int max_stage_width = 0;
    long long peak_bound_violations = 0;  // sampled peaks above the width bound
};

/// Run the full protocol for one transform and word length: evaluate a
/// seeded batch through the flow, compare every output against the dense
/// reference, and check sampled peaks against the word_growth bound.
VerifyStats verify_flow(const TransformSpec& spec, int word_length_bits, int count,
                        std::uint64_t seed);

}  // namespace dctapprox

#endif
