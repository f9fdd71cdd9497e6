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

#include "dctapprox/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "dctapprox/metrics.hpp"

namespace dctapprox {

IntMat8 instantiate(const CandidateParams& params) {
    for (int v : params.a)
        if (v < 0 || v > 2) throw ParameterError("candidate parameters must lie in {0, 1, 2}");
    return structured_matrix_int(params.a);
}

OpCount candidate_cost(const CandidateParams& params) {
    const auto& a = params.a;
    OpCount ops;
    ops.adds = 8;  // even/odd input butterfly, exploitable for every template matrix

    // Even half: u0..u3 feed rows 0/4 through p0 = u0+u3, p1 = u1+u2 and
    // rows 2/6 through q0 = u0-u3, q1 = u1-u2.
    if (a[3] != 0) {
        ops.adds += 2;      // p0, p1
        ops.adds += 1 + 1;  // rows 0 and 4
        if (a[3] == 2) ops.shifts += 2;
    }
    const int even_nz = (a[1] != 0) + (a[5] != 0);
    if (even_nz > 0) {
        ops.adds += 2;                 // q0, q1 (each consumed whenever any of a1, a5 is set)
        ops.adds += 2 * (even_nz - 1);  // combine within rows 2 and 6
        if (a[1] == 2) ops.shifts += 2;
        if (a[5] == 2) ops.shifts += 2;
    }

    // Odd half: rows 1/3/5/7 each combine u4..u7 with the same coefficient
    // multiset {a0, a2, a4, a6} in different orders and signs.
    int odd_nz = 0, odd_twos = 0;
    for (int i : {0, 2, 4, 6}) {
        if (a[i] != 0) ++odd_nz;
        if (a[i] == 2) ++odd_twos;
    }
    if (odd_nz > 0) {
        ops.adds += 4 * (odd_nz - 1);
        ops.shifts += 4 * odd_twos;
    }
    return ops;
}

OpCount candidate_cost(const IntMat8& matrix) {
    CandidateParams params;
    params.a = {std::abs(matrix[1][0]), std::abs(matrix[2][0]), std::abs(matrix[1][1]),
                std::abs(matrix[0][0]), std::abs(matrix[1][2]), std::abs(matrix[2][1]),
                std::abs(matrix[1][3])};
    if (instantiate(params) != matrix)
        throw ParameterError("matrix does not follow the structured template");
    return candidate_cost(params);
}

namespace {

bool has_null_row(const IntMat8& m) {
    for (const auto& row : m) {
        bool all_zero = true;
        for (int v : row)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return true;
    }
    return false;
}

bool gram_is_diagonal(const IntMat8& m) {
    for (int i = 0; i < kN; ++i)
        for (int j = i + 1; j < kN; ++j) {
            long long dot = 0;
            for (int k = 0; k < kN; ++k) dot += (long long)m[i][k] * m[j][k];
            if (dot != 0) return false;
        }
    return true;
}

bool same_up_to_row_negation(const IntMat8& a, const IntMat8& b) {
    for (int i = 0; i < kN; ++i) {
        bool same = true, negated = true;
        for (int j = 0; j < kN; ++j) {
            if (a[i][j] != b[i][j]) same = false;
            if (a[i][j] != -b[i][j]) negated = false;
        }
        if (!same && !negated) return false;
    }
    return true;
}

IntMat8 to_num2(const IntMat8& m) {
    IntMat8 out{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[i][j] = 2 * m[i][j];
    return out;
}

TransformSpec candidate_spec(const CandidateParams& params) {
    TransformSpec spec;
    spec.name = candidate_name(params);
    spec.t_num2 = to_num2(instantiate(params));
    const auto g4 = gram_diagonal_times4(spec.t_num2);
    for (int i = 0; i < kN; ++i) spec.scale[i] = 2.0 / std::sqrt(double(g4[i]));
    return spec;
}

}  // namespace

Mat8 candidate_orthonormal(const CandidateParams& params) {
    return orthogonal_matrix(candidate_spec(params));
}

std::string candidate_name(const CandidateParams& params) {
    std::string name = "a";
    for (int v : params.a) name.push_back(char('0' + v));
    return name;
}

SearchResult run_search(std::span<const ImagePlane> corpus, int retained) {
    SearchResult result;
    result.retained = retained;
    result.candidates.reserve(2187);

    int minimal = -1;
    for (int a0 = 0; a0 < 3; ++a0)
        for (int a1 = 0; a1 < 3; ++a1)
            for (int a2 = 0; a2 < 3; ++a2)
                for (int a3 = 0; a3 < 3; ++a3)
                    for (int a4 = 0; a4 < 3; ++a4)
                        for (int a5 = 0; a5 < 3; ++a5)
                            for (int a6 = 0; a6 < 3; ++a6) {
                                CandidateRecord rec;
                                rec.params.a = {a0, a1, a2, a3, a4, a5, a6};
                                const IntMat8 m = instantiate(rec.params);
                                rec.cost = candidate_cost(rec.params);
                                rec.orthogonal = !has_null_row(m) && gram_is_diagonal(m);
                                if (rec.orthogonal) {
                                    const int total = rec.cost.total();
                                    if (minimal < 0 || total < minimal) minimal = total;
                                }
                                result.candidates.push_back(rec);
                            }
    result.minimal_cost = minimal;

    for (const CandidateRecord& rec : result.candidates) {
        if (!rec.orthogonal || rec.cost.total() != minimal) continue;
        // Collapse candidates equal up to row negation; lexicographic
        // enumeration keeps the first representative.
        const IntMat8 m = instantiate(rec.params);
        const bool duplicate = std::any_of(
            result.winners.begin(), result.winners.end(),
            [&m](const CandidateParams& w) { return same_up_to_row_negation(instantiate(w), m); });
        if (!duplicate) result.winners.push_back(rec.params);
    }

    result.ranked_by_psnr = !corpus.empty();
    for (const CandidateParams& w : result.winners) {
        RankedWinner ranked{w, 0.0};
        if (result.ranked_by_psnr) {
            const PreparedTransform pt = prepare_dense(candidate_name(w), candidate_orthonormal(w));
            ranked.rank_value = corpus_average(corpus, pt, retained).avg_psnr;
        } else {
            ranked.rank_value = mse_markov(candidate_orthonormal(w));
        }
        result.ranked.push_back(ranked);
    }
    std::stable_sort(result.ranked.begin(), result.ranked.end(),
                     [by_psnr = result.ranked_by_psnr](const RankedWinner& x, const RankedWinner& y) {
                         if (x.rank_value != y.rank_value)
                             // best first: highest PSNR, or lowest fallback MSE
                             return by_psnr ? x.rank_value > y.rank_value
                                            : x.rank_value < y.rank_value;
                         return x.params < y.params;
                     });
    return result;
}

}  // namespace dctapprox
