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

#include "dctapprox/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "dctapprox/transform.hpp"

namespace dctapprox {

namespace {

// Adaptive Simpson on [a, b]. The integrands here are trigonometric
// polynomials of degree at most 14, so the recursion bottoms out quickly.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol) {
    const double fa = f(a);
    const double fm = f(0.5 * (a + b));
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 32);
}

void require_finite(const Mat8& m, const char* what) {
    if (!all_finite(m)) throw DomainError(std::string(what) + " contains a non-finite entry");
}

}  // namespace

Mat8 MarkovModel::covariance() const {
    if (!(rho >= 0.0) || rho >= 1.0) throw ParameterError("correlation must lie in [0, 1)");
    Mat8 r{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) r[i][j] = std::pow(rho, std::abs(i - j));
    return r;
}

double RowTransferFunction::magnitude_sq(double omega) const {
    double re = 0.0, im = 0.0;
    for (int n = 0; n < kN; ++n) {
        re += coefficients[n] * std::cos(n * omega);
        im -= coefficients[n] * std::sin(n * omega);
    }
    return re * re + im * im;
}

double total_error_energy(const Mat8& approx, const Mat8& reference) {
    require_finite(approx, "approx");
    require_finite(reference, "reference");
    double sum_sq = 0.0;
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) {
            const double e = reference[i][j] - approx[i][j];
            sum_sq += e * e;
        }
    return std::numbers::pi * sum_sq;
}

double total_error_energy_quadrature(const Mat8& approx, const Mat8& reference, double tol) {
    require_finite(approx, "approx");
    require_finite(reference, "reference");
    double total = 0.0;
    for (int i = 0; i < kN; ++i) {
        RowTransferFunction h;
        for (int j = 0; j < kN; ++j) h.coefficients[j] = reference[i][j] - approx[i][j];
        total += integrate([&h](double w) { return h.magnitude_sq(w); }, 0.0, std::numbers::pi,
                           tol);
    }
    return total;
}

double mse_markov(const Mat8& approx_orthonormal, const MarkovModel& model) {
    if (!(model.rho > 0.0) || model.rho >= 1.0)
        throw ParameterError("mse_markov needs a correlation in (0, 1)");
    const Mat8 r = model.covariance();
    Mat8 e{};
    const Mat8& c = exact_dct().matrix;
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) e[i][j] = c[i][j] - approx_orthonormal[i][j];
    const Mat8 ere = matmul(matmul(e, r), transpose(e));
    double trace = 0.0;
    for (int i = 0; i < kN; ++i) trace += ere[i][i];
    return trace / kN;
}

double coding_gain_db(const Mat8& orthonormal, const MarkovModel& model) {
    const Mat8 r = matmul(matmul(orthonormal, model.covariance()), transpose(orthonormal));
    double log_sum = 0.0;
    for (int k = 0; k < kN; ++k) {
        double synth_sq = 0.0;  // squared norm of the k-th synthesis basis vector
        for (int i = 0; i < kN; ++i) synth_sq += orthonormal[i][k] * orthonormal[i][k];
        const double a = r[k][k];
        if (!(a > 0.0)) throw DomainError("non-positive coefficient variance in coding gain");
        log_sum += std::log10(a * synth_sq);
    }
    return -10.0 * log_sum / kN;
}

double transform_efficiency(const Mat8& orthonormal, const MarkovModel& model) {
    const Mat8 r = matmul(matmul(orthonormal, model.covariance()), transpose(orthonormal));
    double diag = 0.0, all = 0.0;
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) {
            all += std::abs(r[i][j]);
            if (i == j) diag += std::abs(r[i][j]);
        }
    return 100.0 * diag / all;
}

double psnr(const ImagePlane& reference, const ImagePlane& test) {
    if (!reference.same_size(test)) throw DimensionError("psnr: image sizes differ");
    std::uint64_t sum_sq = 0;
    const std::size_t n = reference.samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int d = int(reference.samples[i]) - int(test.samples[i]);
        sum_sq += std::uint64_t(d * d);
    }
    if (sum_sq == 0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 * double(n) / double(sum_sq));
}

double uqi(const ImagePlane& reference, const ImagePlane& test, int window) {
    if (!reference.same_size(test)) throw DimensionError("uqi: image sizes differ");
    if (window < 1 || window > reference.width || window > reference.height)
        throw DimensionError("uqi: window does not fit the image");

    const int w = reference.width;
    const int h = reference.height;
    const int stride = w + 1;

    // Integral images over exact integers; all sums fit 64 bits comfortably.
    std::vector<std::int64_t> sx(std::size_t(stride) * (h + 1), 0), sy = sx, sxx = sx, syy = sx,
                              sxy = sx;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const std::int64_t x = reference.at(r, c);
            const std::int64_t y = test.at(r, c);
            const std::size_t idx = std::size_t(r + 1) * stride + (c + 1);
            const std::size_t up = idx - stride;
            sx[idx] = x + sx[idx - 1] + sx[up] - sx[up - 1];
            sy[idx] = y + sy[idx - 1] + sy[up] - sy[up - 1];
            sxx[idx] = x * x + sxx[idx - 1] + sxx[up] - sxx[up - 1];
            syy[idx] = y * y + syy[idx - 1] + syy[up] - syy[up - 1];
            sxy[idx] = x * y + sxy[idx - 1] + sxy[up] - sxy[up - 1];
        }
    const auto box = [stride, window](const std::vector<std::int64_t>& s, int r, int c) {
        const std::size_t a = std::size_t(r) * stride + c;
        const std::size_t b = std::size_t(r + window) * stride + c + window;
        return s[b] - s[std::size_t(r) * stride + c + window] -
               s[std::size_t(r + window) * stride + c] + s[a];
    };

    const std::int64_t n = std::int64_t(window) * window;
    double sum_q = 0.0;
    std::int64_t windows = 0;
    for (int r = 0; r + window <= h; ++r)
        for (int c = 0; c + window <= w; ++c) {
            const std::int64_t bx = box(sx, r, c);
            const std::int64_t by = box(sy, r, c);
            const std::int64_t bxx = box(sxx, r, c);
            const std::int64_t byy = box(syy, r, c);
            const std::int64_t bxy = box(sxy, r, c);
            // Q = 4*cov*mx*my / ((varx+vary)*(mx^2+my^2)), cleared of the
            // 1/n factors so everything stays integral.
            const std::int64_t var_part = n * (bxx + byy) - bx * bx - by * by;
            const std::int64_t lum_part = bx * bx + by * by;
            double q;
            if (var_part == 0) {
                q = (lum_part == 0) ? 1.0 : 2.0 * double(bx) * double(by) / double(lum_part);
            } else {
                const double numer = 4.0 * double(n * bxy - bx * by) * double(bx) * double(by);
                q = numer / (double(var_part) * double(lum_part));
            }
            sum_q += q;
            ++windows;
        }
    return sum_q / double(windows);
}

}  // namespace dctapprox
