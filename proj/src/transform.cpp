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

#include "dctapprox/transform.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace dctapprox {

namespace {

// All matrix tables below store twice the coefficient value, so 1 means 1/2,
// 2 means 1 and 4 means 2.

// clang-format off

constexpr int kBas2008T[8][8] = {
    {2,  2,  2,  2,  2,  2,  2,  2},
    {2,  2,  0,  0,  0,  0, -2, -2},
    {2,  1, -1, -2, -2, -1,  1,  2},
    {0,  0, -2,  0,  0,  2,  0,  0},
    {2, -2, -2,  2,  2, -2, -2,  2},
    {2, -2,  0,  0,  0,  0,  2, -2},
    {1, -2,  2, -1, -1,  2, -2,  1},
    {0,  0,  0, -2,  2,  0,  0,  0},
};

constexpr int kCb2011T[8][8] = {
    {2,  2,  2,  2,  2,  2,  2,  2},
    {2,  2,  2,  0,  0, -2, -2, -2},
    {2,  0,  0, -2, -2,  0,  0,  2},
    {2,  0, -2, -2,  2,  2,  0, -2},
    {2, -2, -2,  2,  2, -2, -2,  2},
    {2, -2,  0,  2, -2,  0,  2, -2},
    {0, -2,  2,  0,  0,  2, -2,  0},
    {0, -2,  2, -2,  2, -2,  2,  0},
};

constexpr int kModCb2011T[8][8] = {
    {2,  2,  2,  2,  2,  2,  2,  2},
    {2,  0,  0,  0,  0,  0,  0, -2},
    {2,  0,  0, -2, -2,  0,  0,  2},
    {0,  0, -2,  0,  0,  2,  0,  0},
    {2, -2, -2,  2,  2, -2, -2,  2},
    {0, -2,  0,  0,  0,  0,  2,  0},
    {0, -2,  2,  0,  0,  2, -2,  0},
    {0,  0,  0, -2,  2,  0,  0,  0},
};

constexpr int kMultibeam2012T[8][8] = {
    {2,  2,  2,  2,  2,  2,  2,  2},
    {4,  2,  2,  0,  0, -2, -2, -4},
    {4,  2, -2, -4, -4, -2,  2,  4},
    {2,  0, -4, -2,  2,  4,  0, -2},
    {2, -2, -2,  2,  2, -2, -2,  2},
    {2, -4,  0,  2, -2,  0,  4, -2},
    {2, -4,  4, -2, -2,  4, -4,  2},
    {0, -2,  2, -4,  4, -2,  2,  0},
};

constexpr int kProposedT[8][8] = {
    {2,  2,  2,  2,  2,  2,  2,  2},
    {0,  2,  0,  0,  0,  0, -2,  0},
    {2,  0,  0, -2, -2,  0,  0,  2},
    {2,  0,  0,  0,  0,  0,  0, -2},
    {2, -2, -2,  2,  2, -2, -2,  2},
    {0,  0,  0,  2, -2,  0,  0,  0},
    {0, -2,  2,  0,  0,  2, -2,  0},
    {0,  0,  2,  0,  0, -2,  0,  0},
};

// Stage shared by every factorization: the even/odd butterfly pairing
// x[k] with x[7-k].
constexpr int kEvenOddButterfly[8][8] = {
    {2, 0, 0, 0, 0, 0, 0,  2},
    {0, 2, 0, 0, 0, 0, 2,  0},
    {0, 0, 2, 0, 0, 2, 0,  0},
    {0, 0, 0, 2, 2, 0, 0,  0},
    {0, 0, 0, 2, -2, 0, 0, 0},
    {0, 0, 2, 0, 0, -2, 0, 0},
    {0, 2, 0, 0, 0, 0, -2, 0},
    {2, 0, 0, 0, 0, 0, 0, -2},
};

constexpr int kBas2008Stage2[8][8] = {
    {2, 0,  0,  2,  0,  0,  0, 0},
    {0, 0,  0,  0,  0,  0,  2, 2},
    {0, 2,  2,  0,  0,  0,  0, 0},
    {0, 0,  0,  0,  0, -2,  0, 0},
    {0, 2, -2,  0,  0,  0,  0, 0},
    {0, 0,  0,  0,  0,  0, -2, 2},
    {2, 0,  0, -2,  0,  0,  0, 0},
    {0, 0,  0,  0, -2,  0,  0, 0},
};

// Carries the only half coefficients in the suite (entries 1 = 1/2).
constexpr int kBas2008Stage3[8][8] = {
    {2, 0,  2, 0,  0, 0, 0, 0},
    {0, 2,  0, 0,  0, 0, 0, 0},
    {0, 0,  0, 0,  1, 0, 2, 0},
    {0, 0,  0, 2,  0, 0, 0, 0},
    {2, 0, -2, 0,  0, 0, 0, 0},
    {0, 0,  0, 0,  0, 2, 0, 0},
    {0, 0,  0, 0, -2, 0, 1, 0},
    {0, 0,  0, 0,  0, 0, 0, 2},
};

constexpr int kBas2011Stage2[8][8] = {
    {2, 0,  0,  2, 0, 0,  0, 0},
    {0, 2,  2,  0, 0, 0,  0, 0},
    {0, 2, -2,  0, 0, 0,  0, 0},
    {2, 0,  0, -2, 0, 0,  0, 0},
    {0, 0,  0,  0, 2, 0,  0, 0},
    {0, 0,  0,  0, 0, 2,  0, 0},
    {0, 0,  0,  0, 0, 0,  2, 2},
    {0, 0,  0,  0, 0, 0, -2, 2},
};

constexpr int kCb2011Stage2[8][8] = {
    {2, 0,  0,  2,  0,  0,  0, 0},
    {0, 2,  2,  0,  0,  0,  0, 0},
    {0, 2, -2,  0,  0,  0,  0, 0},
    {2, 0,  0, -2,  0,  0,  0, 0},
    {0, 0,  0,  0, -2,  2, -2, 0},
    {0, 0,  0,  0, -2, -2,  0, 2},
    {0, 0,  0,  0,  2,  0, -2, 2},
    {0, 0,  0,  0,  0,  2,  2, 2},
};

// Sum/difference on the first two lanes, negate the third, pass the rest.
// Final stage of the cb2011, modcb2011 and proposed factorizations.
constexpr int kDcCombineStage[8][8] = {
    {2,  2,  0, 0, 0, 0, 0, 0},
    {2, -2,  0, 0, 0, 0, 0, 0},
    {0,  0, -2, 0, 0, 0, 0, 0},
    {0,  0,  0, 2, 0, 0, 0, 0},
    {0,  0,  0, 0, 2, 0, 0, 0},
    {0,  0,  0, 0, 0, 2, 0, 0},
    {0,  0,  0, 0, 0, 0, 2, 0},
    {0,  0,  0, 0, 0, 0, 0, 2},
};

constexpr int kModCb2011Stage2[8][8] = {
    {2, 0,  0,  2,  0,  0,  0, 0},
    {0, 2,  2,  0,  0,  0,  0, 0},
    {0, 2, -2,  0,  0,  0,  0, 0},
    {2, 0,  0, -2,  0,  0,  0, 0},
    {0, 0,  0,  0, -2,  0,  0, 0},
    {0, 0,  0,  0,  0, -2,  0, 0},
    {0, 0,  0,  0,  0,  0, -2, 0},
    {0, 0,  0,  0,  0,  0,  0, 2},
};

constexpr int kMultibeam2012Stage2[8][8] = {
    {2, 0,  0,  2,  0,  0,  0, 0},
    {0, 2,  2,  0,  0,  0,  0, 0},
    {0, 2, -2,  0,  0,  0,  0, 0},
    {2, 0,  0, -2,  0,  0,  0, 0},
    {0, 0,  0,  0,  0,  2,  2, 4},
    {0, 0,  0,  0, -2, -4,  0, 2},
    {0, 0,  0,  0,  2,  0, -4, 2},
    {0, 0,  0,  0, -4,  2, -2, 0},
};

constexpr int kMultibeam2012Stage3[8][8] = {
    {2,  2,  0, 0, 0, 0, 0, 0},
    {2, -2,  0, 0, 0, 0, 0, 0},
    {0,  0,  2, 4, 0, 0, 0, 0},
    {0,  0, -4, 2, 0, 0, 0, 0},
    {0,  0,  0, 0, 2, 0, 0, 0},
    {0,  0,  0, 0, 0, 2, 0, 0},
    {0,  0,  0, 0, 0, 0, 2, 0},
    {0,  0,  0, 0, 0, 0, 0, 2},
};

constexpr int kProposedStage2[8][8] = {
    {2, 0,  0,  2, 0, 0, 0, 0},
    {0, 2,  2,  0, 0, 0, 0, 0},
    {0, 2, -2,  0, 0, 0, 0, 0},
    {2, 0,  0, -2, 0, 0, 0, 0},
    {0, 0,  0,  0, 2, 0, 0, 0},
    {0, 0,  0,  0, 0, 2, 0, 0},
    {0, 0,  0,  0, 0, 0, 2, 0},
    {0, 0,  0,  0, 0, 0, 0, 2},
};

// Row template shared by the exact DCT, the catalog matrices that keep the
// DCT row structure, and the search space: entry (i,j) is
// sign[i][j] * v[index[i][j]].
constexpr int kTemplateIndex[8][8] = {
    {3, 3, 3, 3, 3, 3, 3, 3},
    {0, 2, 4, 6, 6, 4, 2, 0},
    {1, 5, 5, 1, 1, 5, 5, 1},
    {2, 6, 0, 4, 4, 0, 6, 2},
    {3, 3, 3, 3, 3, 3, 3, 3},
    {4, 0, 6, 2, 2, 6, 0, 4},
    {5, 1, 1, 5, 5, 1, 1, 5},
    {6, 4, 2, 0, 0, 2, 4, 6},
};

constexpr int kTemplateSign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, +1, +1, +1, -1, -1, -1, -1},
    {+1, +1, -1, -1, -1, -1, +1, +1},
    {+1, -1, -1, -1, +1, +1, +1, -1},
    {+1, -1, -1, +1, +1, -1, -1, +1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
    {+1, -1, +1, -1, -1, +1, -1, +1},
    {+1, -1, +1, -1, +1, -1, +1, -1},
};

// clang-format on

IntMat8 to_int_mat(const int (&table)[8][8]) {
    IntMat8 m{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) m[i][j] = table[i][j];
    return m;
}

// The parametric transform's matrix, stage and scale depend on a.
IntMat8 bas2011_t(int a) {
    const int A = 2 * a;
    const int table[8][8] = {
        {2, 2, 2, 2, 2, 2, 2, 2},
        {2, 2, 0, 0, 0, 0, -2, -2},
        {2, A, -A, -2, -2, -A, A, 2},
        {0, 0, 2, 0, 0, -2, 0, 0},
        {2, -2, -2, 2, 2, -2, -2, 2},
        {0, 0, 0, 2, -2, 0, 0, 0},
        {2, -2, 0, 0, 0, 0, 2, -2},
        {A, -2, 2, -A, -A, 2, -2, A},
    };
    return to_int_mat(table);
}

SparseStage bas2011_stage3(int a) {
    const int A = 2 * a;
    const int table[8][8] = {
        {2, 2, 0, 0, 0, 0, 0, 0},
        {2, -2, 0, 0, 0, 0, 0, 0},
        {0, 0, A, 2, 0, 0, 0, 0},
        {0, 0, -2, A, 0, 0, 0, 0},
        {0, 0, 0, 0, 2, 0, 0, 0},
        {0, 0, 0, 0, 0, 2, 0, 0},
        {0, 0, 0, 0, 0, 0, 2, 0},
        {0, 0, 0, 0, 0, 0, 0, 2},
    };
    return SparseStage::from_table(table);
}

Vec8 derive_scale(const IntMat8& t_num2) {
    const auto g4 = gram_diagonal_times4(t_num2);
    Vec8 scale{};
    for (int i = 0; i < kN; ++i) {
        if (g4[i] <= 0) throw OrthogonalityError("transform row " + std::to_string(i) + " has zero norm");
        scale[i] = 2.0 / std::sqrt(double(g4[i]));
    }
    return scale;
}

TransformSpec make_spec(TransformId id, std::string name, const IntMat8& t,
                        std::optional<int> param = std::nullopt) {
    TransformSpec spec;
    spec.id = id;
    spec.name = std::move(name);
    spec.t_num2 = t;
    spec.scale = derive_scale(t);
    spec.param = param;
    return spec;
}

}  // namespace

Mat8 TransformSpec::t() const {
    Mat8 out{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[i][j] = t_num2[i][j] / 2.0;
    return out;
}

std::array<long long, 8> gram_diagonal_times4(const IntMat8& t_num2) {
    std::array<long long, 8> diag{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) diag[i] += (long long)t_num2[i][j] * t_num2[i][j];
    return diag;
}

TransformSpec catalog(std::string_view name, std::optional<int> param) {
    const bool is_bas2011 = (name == "bas2011");
    if (!is_bas2011 && param.has_value())
        throw ParameterError(std::string(name) + " takes no parameter");
    if (is_bas2011) {
        if (!param.has_value())
            throw ParameterError("bas2011 requires a parameter in {0, 1, 2}");
        if (*param < 0 || *param > 2)
            throw ParameterError("bas2011 parameter must be 0, 1 or 2 (half-integer values "
                                 "are excluded: halving an odd intermediate is not exact)");
        return make_spec(TransformId::Bas2011, "bas2011_a" + std::to_string(*param),
                         bas2011_t(*param), *param);
    }
    if (name == "bas2008")
        return make_spec(TransformId::Bas2008, "bas2008", to_int_mat(kBas2008T));
    if (name == "cb2011")
        return make_spec(TransformId::Cb2011, "cb2011", to_int_mat(kCb2011T));
    if (name == "modcb2011")
        return make_spec(TransformId::ModCb2011, "modcb2011", to_int_mat(kModCb2011T));
    if (name == "multibeam2012")
        return make_spec(TransformId::Multibeam2012, "multibeam2012", to_int_mat(kMultibeam2012T));
    if (name == "proposed")
        return make_spec(TransformId::Proposed, "proposed", to_int_mat(kProposedT));
    throw CatalogError("unknown transform '" + std::string(name) +
                       "'; valid names: bas2008, bas2011, cb2011, modcb2011, "
                       "multibeam2012, proposed");
}

std::vector<TransformSpec> catalog_all() {
    std::vector<TransformSpec> all;
    all.push_back(catalog("bas2008"));
    for (int a = 0; a <= 2; ++a) all.push_back(catalog("bas2011", a));
    all.push_back(catalog("cb2011"));
    all.push_back(catalog("modcb2011"));
    all.push_back(catalog("multibeam2012"));
    all.push_back(catalog("proposed"));
    return all;
}

std::vector<std::string> catalog_selectors() {
    return {"bas2008",   "bas2011_a0",    "bas2011_a1", "bas2011_a2",
            "cb2011",    "modcb2011",     "multibeam2012", "proposed"};
}

TransformSpec catalog_by_selector(std::string_view selector) {
    if (selector.rfind("bas2011_a", 0) == 0 && selector.size() == 10) {
        const char digit = selector[9];
        if (digit >= '0' && digit <= '2') return catalog("bas2011", digit - '0');
        throw ParameterError("bas2011 parameter must be 0, 1 or 2");
    }
    return catalog(selector);
}

Mat8 structured_matrix(const std::array<double, 7>& v) {
    Mat8 out{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[i][j] = kTemplateSign[i][j] * v[kTemplateIndex[i][j]];
    return out;
}

IntMat8 structured_matrix_int(const std::array<int, 7>& v) {
    IntMat8 out{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[i][j] = kTemplateSign[i][j] * v[kTemplateIndex[i][j]];
    return out;
}

const ExactDct& exact_dct() {
    static const ExactDct dct = [] {
        ExactDct d;
        for (int k = 0; k < 7; ++k)
            d.cos_table[k] = std::cos(2.0 * std::numbers::pi * (k + 1) / 32.0);
        d.matrix = structured_matrix(d.cos_table);
        for (auto& row : d.matrix)
            for (double& v : row) v *= 0.5;
        return d;
    }();
    return dct;
}

FlowGraph flow_graph(const TransformSpec& spec) {
    if (!spec.id) throw CatalogError("no factorization for non-catalog transform '" + spec.name + "'");

    FlowGraph flow;
    flow.stages.push_back(SparseStage::from_table(kEvenOddButterfly));
    switch (*spec.id) {
        case TransformId::Bas2008:
            flow.stages.push_back(SparseStage::from_table(kBas2008Stage2));
            flow.stages.push_back(SparseStage::from_table(kBas2008Stage3));
            break;
        case TransformId::Bas2011:
            flow.stages.push_back(SparseStage::from_table(kBas2011Stage2));
            flow.stages.push_back(bas2011_stage3(spec.param.value()));
            flow.perm = Permutation::from_cycles({{2, 5, 6, 4, 8, 7}});
            break;
        case TransformId::Cb2011:
            flow.stages.push_back(SparseStage::from_table(kCb2011Stage2));
            flow.stages.push_back(SparseStage::from_table(kDcCombineStage));
            flow.perm = Permutation::from_cycles({{2, 5, 8}, {3, 7, 6, 4}});
            break;
        case TransformId::ModCb2011:
            flow.stages.push_back(SparseStage::from_table(kModCb2011Stage2));
            flow.stages.push_back(SparseStage::from_table(kDcCombineStage));
            flow.perm = Permutation::from_cycles({{2, 5, 8}, {3, 7, 6, 4}});
            break;
        case TransformId::Multibeam2012:
            flow.stages.push_back(SparseStage::from_table(kMultibeam2012Stage2));
            flow.stages.push_back(SparseStage::from_table(kMultibeam2012Stage3));
            flow.perm = Permutation::from_cycles({{2, 5}, {4, 7, 6}});
            break;
        case TransformId::Proposed:
            flow.stages.push_back(SparseStage::from_table(kProposedStage2));
            flow.stages.push_back(SparseStage::from_table(kDcCombineStage));
            flow.perm = Permutation::from_cycles({{2, 5, 6, 8, 4, 3, 7}});
            break;
    }
    return flow;
}

Mat8 orthogonal_matrix(const TransformSpec& spec) {
    // Exact integer gram check; the diagonal scale is re-derived from T so a
    // corrupted matrix cannot ride on a stale scale field.
    for (int i = 0; i < kN; ++i)
        for (int j = i + 1; j < kN; ++j) {
            long long dot = 0;
            for (int k = 0; k < kN; ++k) dot += (long long)spec.t_num2[i][k] * spec.t_num2[j][k];
            if (dot != 0)
                throw OrthogonalityError("T*T^t of '" + spec.name + "' is not diagonal at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    const Vec8 scale = derive_scale(spec.t_num2);
    Mat8 out{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[i][j] = scale[i] * (spec.t_num2[i][j] / 2.0);
    return out;
}

}  // namespace dctapprox
