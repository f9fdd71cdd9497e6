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

#ifndef DCTAPPROX_TRANSFORM_HPP
#define DCTAPPROX_TRANSFORM_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dctapprox/flowgraph.hpp"
#include "dctapprox/linalg.hpp"

namespace dctapprox {

enum class TransformId {
    Bas2008,
    Bas2011,
    Cb2011,
    ModCb2011,
    Multibeam2012,
    Proposed,
};

/// A multiplierless DCT approximation: an integer low-complexity matrix T
/// together with the diagonal scale that makes scale*T orthonormal.
///
/// T entries are confined to {0, +-1/2, +-1, +-2} and stored exactly as
/// twice their value, so factorization checks run over integers.
struct TransformSpec {
    std::optional<TransformId> id;  // empty for matrices built outside the catalog
    std::string name;
    IntMat8 t_num2{};  // entries of T, times two
    Vec8 scale{};      // derived as 1/sqrt(diag(T*T^t))
    std::optional<int> param;

    double t_at(int row, int col) const { return t_num2[row][col] / 2.0; }
    Mat8 t() const;
};

/// Look up a transform by its stable name. Valid names: bas2008, bas2011,
/// cb2011, modcb2011, multibeam2012, proposed. bas2011 requires param in
/// {0, 1, 2}; other names take no parameter. The half-integer parameter
/// variant is rejected because a right shift of an odd intermediate is not
/// exact in integer hardware.
TransformSpec catalog(std::string_view name, std::optional<int> param = std::nullopt);

/// All evaluated variants in fixed order: bas2008, bas2011 a=0/1/2, cb2011,
/// modcb2011, multibeam2012, proposed.
std::vector<TransformSpec> catalog_all();

/// Canonical per-variant selector strings accepted by the tools
/// (bas2011 appears as bas2011_a0, bas2011_a1, bas2011_a2).
std::vector<std::string> catalog_selectors();

/// Resolve a per-variant selector string to its spec.
TransformSpec catalog_by_selector(std::string_view selector);

/// The exact orthonormal 8-point DCT-II matrix, built from the cosine table
/// cos_table[k] = cos(2*pi*(k+1)/32) via the shared even/odd row template.
struct ExactDct {
    Mat8 matrix{};
    std::array<double, 7> cos_table{};
};

const ExactDct& exact_dct();

/// The shared even/odd row layout of 8-point DCT-like matrices: rows 0 and 4
/// use v[3], rows 1/3/5/7 combine v[0],v[2],v[4],v[6] with alternating signs,
/// rows 2 and 6 combine v[1],v[5].
Mat8 structured_matrix(const std::array<double, 7>& v);
IntMat8 structured_matrix_int(const std::array<int, 7>& v);

/// The factorized additions-only realization of a catalog transform.
/// flow_to_matrix(flow_graph(s)) equals s.t exactly.
FlowGraph flow_graph(const TransformSpec& spec);

/// The orthonormal matrix scale*T. Throws OrthogonalityError if T*T^t has an
/// off-diagonal entry.
Mat8 orthogonal_matrix(const TransformSpec& spec);

/// diag(T*T^t) scaled by 4 (exact integers), used to derive and cross-check
/// the diagonal scale.
std::array<long long, 8> gram_diagonal_times4(const IntMat8& t_num2);

}  // namespace dctapprox

#endif
