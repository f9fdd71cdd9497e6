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

#include <cmath>
#include <limits>
#include <numbers>

#include "dctapprox/metrics.hpp"
#include "dctapprox/transform.hpp"
#include "test_util.hpp"

using namespace dctapprox;

TEST_CASE("markov covariance structure") {
    const Mat8 r = MarkovModel{0.95}.covariance();
    for (int i = 0; i < 8; ++i) {
        CHECK(r[i][i] == 1.0);
        for (int j = 0; j < 8; ++j) {
            CHECK(r[i][j] == r[j][i]);
            CHECK(std::abs(r[i][j] - std::pow(0.95, std::abs(i - j))) < 1e-15);
        }
    }
    CHECK_THROWS_AS(MarkovModel{1.0}.covariance(), ParameterError);
}

TEST_CASE("total error energy against published values") {
    const Mat8& c = exact_dct().matrix;
    CHECK(std::abs(total_error_energy(orthogonal_matrix(catalog("cb2011")), c) - 1.794) < 0.001);
    CHECK(total_error_energy(c, c) == 0.0);

    Mat8 bad = c;
    bad[3][3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(total_error_energy(bad, c), DomainError);
}

TEST_CASE("quadrature agrees with the closed form") {
    const Mat8& c = exact_dct().matrix;
    for (const TransformSpec& spec : catalog_all()) {
        CAPTURE(spec.name);
        const Mat8 chat = orthogonal_matrix(spec);
        CHECK(std::abs(total_error_energy_quadrature(chat, c) - total_error_energy(chat, c)) <
              1e-8);
    }
    CHECK(std::abs(total_error_energy_quadrature(c, c)) < 1e-12);
}

TEST_CASE("row spectra are symmetric about pi") {
    RowTransferFunction h{{1.0, -0.5, 2.0, 0.0, 1.0, 0.0, -1.0, 0.5}};
    for (double w : {0.1, 0.7, 1.3, 2.9})
        CHECK(std::abs(h.magnitude_sq(w) - h.magnitude_sq(2.0 * std::numbers::pi - w)) < 1e-12);
}

TEST_CASE("markov mse against published values") {
    CHECK(std::abs(mse_markov(orthogonal_matrix(catalog("proposed"))) - 7.899e-2) < 1e-4);
    CHECK(std::abs(mse_markov(orthogonal_matrix(catalog("multibeam2012"))) - 0.621e-2) < 1e-4);
    CHECK(mse_markov(exact_dct().matrix) == 0.0);
    CHECK_THROWS_AS(mse_markov(exact_dct().matrix, MarkovModel{0.0}), ParameterError);
}

TEST_CASE("coding gain against published values") {
    CHECK(std::abs(coding_gain_db(exact_dct().matrix) - 8.826) < 0.001);
    CHECK(std::abs(coding_gain_db(orthogonal_matrix(catalog("proposed"))) - 7.333) < 0.001);
    // white noise compacts nothing
    CHECK(std::abs(coding_gain_db(exact_dct().matrix, MarkovModel{0.0})) < 1e-12);
}

TEST_CASE("coding measures ignore row order") {
    const Mat8 chat = orthogonal_matrix(catalog("cb2011"));
    Mat8 shuffled{};
    const int order[8] = {5, 2, 7, 0, 6, 4, 1, 3};
    for (int i = 0; i < 8; ++i) shuffled[i] = chat[order[i]];

    CHECK(std::abs(coding_gain_db(shuffled) - coding_gain_db(chat)) < 1e-12);
    CHECK(std::abs(transform_efficiency(shuffled) - transform_efficiency(chat)) < 1e-12);
}

TEST_CASE("transform efficiency against published values") {
    CHECK(std::abs(transform_efficiency(exact_dct().matrix) - 93.991) < 0.01);
    CHECK(std::abs(transform_efficiency(orthogonal_matrix(catalog("modcb2011"))) - 80.897) < 0.01);
    CHECK(std::abs(transform_efficiency(exact_dct().matrix, MarkovModel{0.0}) - 100.0) < 1e-9);
}

TEST_CASE("psnr basics") {
    const ImagePlane img = testutil::synthetic_image(64, 64, 42);
    CHECK(std::isinf(psnr(img, img)));

    ImagePlane zeros(8, 8), full(8, 8);
    for (auto& s : full.samples) s = 255;
    CHECK(psnr(zeros, full) == 0.0);

    // one pixel off by one: closed-form mse is 1/(512*512)
    ImagePlane big(512, 512), off = big;
    off.at(100, 200) = 1;
    const double expected = 10.0 * std::log10(255.0 * 255.0 * 512.0 * 512.0);
    CHECK(std::abs(psnr(big, off) - expected) < 1e-9);
    CHECK(psnr(off, big) == psnr(big, off));

    CHECK_THROWS_AS(psnr(zeros, ImagePlane(8, 16)), DimensionError);
}

namespace {

// Naive per-window evaluation, the independent oracle for the
// integral-image implementation.
double uqi_naive(const ImagePlane& x, const ImagePlane& y, int win) {
    double sum = 0.0;
    int count = 0;
    for (int r = 0; r + win <= x.height; ++r)
        for (int c = 0; c + win <= x.width; ++c) {
            double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
            for (int i = 0; i < win; ++i)
                for (int j = 0; j < win; ++j) {
                    const double a = x.at(r + i, c + j);
                    const double b = y.at(r + i, c + j);
                    sx += a; sy += b; sxx += a * a; syy += b * b; sxy += a * b;
                }
            const double n = double(win) * win;
            const double mx = sx / n, my = sy / n;
            const double vx = sxx / n - mx * mx, vy = syy / n - my * my;
            const double cov = sxy / n - mx * my;
            double q;
            if (vx + vy == 0.0)
                q = (mx * mx + my * my == 0.0) ? 1.0 : 2.0 * mx * my / (mx * mx + my * my);
            else
                q = 4.0 * cov * mx * my / ((vx + vy) * (mx * mx + my * my));
            sum += q;
            ++count;
        }
    return sum / count;
}

}  // namespace

TEST_CASE("uqi basics and properties") {
    const ImagePlane img = testutil::synthetic_image(48, 40, 7);
    CHECK(uqi(img, img) == 1.0);

    ImagePlane negated = img;
    for (auto& s : negated.samples) s = std::uint8_t(255 - s);
    CHECK(uqi(img, negated) < 0.0);

    // constant luminance offset on a mid-range image: structure intact
    ImagePlane brighter = img;
    for (auto& s : brighter.samples) s = std::uint8_t(std::min(255, s + 10));
    const double offset_q = uqi(img, brighter);
    CHECK(offset_q < 1.0);
    CHECK(offset_q > 0.9);

    const ImagePlane other = testutil::synthetic_image(48, 40, 8);
    CHECK(uqi(img, other) == uqi(other, img));
    CHECK(uqi(img, other) <= 1.0);
    CHECK(uqi(img, other) >= -1.0);

    CHECK(std::abs(uqi(img, other) - uqi_naive(img, other, 8)) < 1e-12);
    CHECK(std::abs(uqi(img, negated) - uqi_naive(img, negated, 8)) < 1e-12);

    ImagePlane flat(16, 16);
    for (auto& s : flat.samples) s = 100;
    CHECK(uqi(flat, flat) == 1.0);  // zero-variance identical windows
}
