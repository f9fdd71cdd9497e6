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

#ifndef DCTAPPROX_SEARCH_HPP
#define DCTAPPROX_SEARCH_HPP

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "dctapprox/codec.hpp"
#include "dctapprox/linalg.hpp"

namespace dctapprox {

/// Point in the 7-parameter design space: a[i] in {0, 1, 2} fills the
/// structured 8x8 template (see structured_matrix_int).
struct CandidateParams {
    std::array<int, 7> a{};
    auto operator<=>(const CandidateParams&) const = default;
};

/// Instantiate the template matrix for a parameter vector.
IntMat8 instantiate(const CandidateParams& params);

/// Arithmetic cost of a template matrix, counted on the canonical
/// factorized evaluation that every template instance admits:
///
///   1. even/odd input butterfly, 8 additions, always;
///   2. even half: second-level butterfly p0 = u0+u3, p1 = u1+u2,
///      q0 = u0-u3, q1 = u1-u2 (one addition per value actually consumed),
///      then rows 0/4 combine p0,p1 and rows 2/6 combine q0,q1 at
///      (nonzero terms - 1) additions per row;
///   3. odd half: each of rows 1/3/5/7 combines u4..u7 directly at
///      (nonzero terms - 1) additions per row.
///
/// Shifts: one per coefficient of magnitude 2 consumed in steps 2-3.
/// Rows that are entirely zero contribute nothing. The minimizer compares
/// candidates by adds + shifts.
OpCount candidate_cost(const CandidateParams& params);

/// Same, recovering the parameters from a template-shaped matrix.
/// Throws ParameterError if the matrix does not match the template.
OpCount candidate_cost(const IntMat8& matrix);

struct CandidateRecord {
    CandidateParams params;
    OpCount cost;
    bool orthogonal = false;  // passed the non-null-row and diagonal-gram filters
};

struct RankedWinner {
    CandidateParams params;
    double rank_value = 0;  // avg corpus PSNR at the retention level, or the
                            // MSE fallback when no corpus is configured
};

struct SearchResult {
    std::vector<CandidateRecord> candidates;  // all 3^7 = 2187, lexicographic
    int minimal_cost = 0;                     // adds + shifts of the winners
    std::vector<CandidateParams> winners;     // minimal-cost orthogonal candidates
    std::vector<RankedWinner> ranked;         // winners in ranking order
    bool ranked_by_psnr = false;
    int retained = 10;
};

/// Exhaustive design-space search: enumerate all 2187 parameter vectors,
/// drop candidates with a null row or a non-diagonal T*T^t, keep the
/// minimal-cost survivors, and rank them by average corpus PSNR at the given
/// retention level (highest first, ties broken by lexicographic parameters).
/// Without a corpus the ranking falls back to ascending MSE against the
/// exact DCT, flagged via ranked_by_psnr = false. Winners identical up to
/// row negation are collapsed to one entry.
SearchResult run_search(std::span<const ImagePlane> corpus = {}, int retained = 10);

/// Orthonormal matrix of a candidate (derived diagonal scale). Throws
/// OrthogonalityError when T*T^t is not diagonal.
Mat8 candidate_orthonormal(const CandidateParams& params);

/// Compact name for reports, e.g. "a0111000".
std::string candidate_name(const CandidateParams& params);

}  // namespace dctapprox

#endif
