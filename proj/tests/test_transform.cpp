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

#include <doctest.h>

#include <array>
#include <cmath>

#include "dctapprox/transform.hpp"

using namespace dctapprox;

TEST_CASE("exact dct entries and orthonormality") {
    const ExactDct& dct = exact_dct();

    CHECK(dct.matrix[0][0] == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    // first-column entry of the first AC row, frozen from a high-precision
    // evaluation of cos(pi/16)/2
    CHECK(dct.matrix[1][0] == doctest::Approx(0.49039264020161522).epsilon(1e-15));
    for (int j = 0; j < 8; ++j)
        CHECK(dct.matrix[0][j] == doctest::Approx(dct.cos_table[3] / 2.0).epsilon(1e-15));

    CHECK(max_abs_diff(matmul(dct.matrix, transpose(dct.matrix)), identity8()) < 1e-12);
}

TEST_CASE("catalog matrices match their published form") {
    const TransformSpec proposed = catalog("proposed");
    const std::array<int, 8> row1 = {0, 2, 0, 0, 0, 0, -2, 0};  // 2x the entries
    for (int j = 0; j < 8; ++j) CHECK(proposed.t_num2[1][j] == row1[j]);

    const auto gram4 = gram_diagonal_times4(proposed.t_num2);
    const std::array<long long, 8> expected = {32, 8, 16, 8, 32, 8, 16, 8};  // 4*diag
    CHECK(gram4 == expected);
}

TEST_CASE("derived diagonal scales equal the published ones") {
    const double s8 = 1.0 / std::sqrt(8.0);
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s5 = 1.0 / std::sqrt(5.0);
    const double s6 = 1.0 / std::sqrt(6.0);

    const auto check_scale = [](const TransformSpec& spec, const Vec8& expected) {
        for (int i = 0; i < 8; ++i)
            CHECK(spec.scale[i] == doctest::Approx(expected[i]).epsilon(1e-15));
    };

    check_scale(catalog("bas2008"), {s8, 0.5, s5, s2, s8, 0.5, s5, s2});
    for (int a = 0; a <= 2; ++a) {
        const double sa = 1.0 / std::sqrt(4.0 + 4.0 * a * a);
        check_scale(catalog("bas2011", a), {s8, 0.5, sa, s2, s8, s2, 0.5, sa});
    }
    check_scale(catalog("cb2011"), {s8, s6, 0.5, s6, s8, s6, 0.5, s6});
    check_scale(catalog("modcb2011"), {s8, s2, 0.5, s2, s8, s2, 0.5, s2});
    check_scale(catalog("multibeam2012"),
                {0.5 * s2, 0.5 / std::sqrt(3.0), 0.5 * s5, 0.5 / std::sqrt(3.0), 0.5 * s2,
                 0.5 / std::sqrt(3.0), 0.5 * s5, 0.5 / std::sqrt(3.0)});
    check_scale(catalog("proposed"), {s8, s2, 0.5, s2, s8, s2, 0.5, s2});
}

TEST_CASE("catalog rejects bad names and parameters") {
    CHECK_THROWS_AS(catalog("dct9000"), CatalogError);
    CHECK_THROWS_AS(catalog("bas2011"), ParameterError);
    CHECK_THROWS_AS(catalog("bas2011", 3), ParameterError);
    CHECK_THROWS_AS(catalog("bas2011", -1), ParameterError);
    CHECK_THROWS_AS(catalog("proposed", 1), ParameterError);
    CHECK_THROWS_AS(catalog_by_selector("bas2011_a7"), ParameterError);
    CHECK_THROWS_AS(catalog_by_selector("nope"), CatalogError);
}

TEST_CASE("selectors resolve to the full evaluated suite") {
    const auto all = catalog_all();
    REQUIRE(all.size() == 8);
    const auto selectors = catalog_selectors();
    REQUIRE(selectors.size() == 8);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].name == selectors[i]);
        CHECK(catalog_by_selector(selectors[i]).t_num2 == all[i].t_num2);
    }
}

TEST_CASE("orthogonal_matrix produces orthonormal bases") {
    for (const TransformSpec& spec : catalog_all()) {
        const Mat8 chat = orthogonal_matrix(spec);
        CHECK(max_abs_diff(matmul(chat, transpose(chat)), identity8()) < 1e-12);
    }

    const Mat8 row0 = orthogonal_matrix(catalog("proposed"));
    for (int j = 0; j < 8; ++j)
        CHECK(row0[0][j] == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
}

TEST_CASE("a corrupted matrix fails the orthogonality gate") {
    TransformSpec spec = catalog("proposed");
    spec.t_num2[2][0] = -spec.t_num2[2][0];  // one sign flip in row 2
    CHECK_THROWS_AS(orthogonal_matrix(spec), OrthogonalityError);
}
