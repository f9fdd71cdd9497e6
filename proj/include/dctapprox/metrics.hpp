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

#ifndef DCTAPPROX_METRICS_HPP
#define DCTAPPROX_METRICS_HPP

#include "dctapprox/image.hpp"
#include "dctapprox/linalg.hpp"

namespace dctapprox {

/// First-order Markov source: zero mean, unit variance, covariance
/// R[i][j] = rho^|i-j|. rho = 0.95 is the usual stand-in for natural images,
/// rho = 0 degenerates to white noise (R = I).
struct MarkovModel {
    double rho = 0.95;
    Mat8 covariance() const;
};

/// Transfer function of one matrix row,
/// H(w) = sum_n c[n] * exp(-j*n*w), n = 0..7.
struct RowTransferFunction {
    Vec8 coefficients{};
    double magnitude_sq(double omega) const;
};

/// Total error energy between two transforms: the squared-magnitude spectra
/// of the rows of (reference - approx), integrated over [0, pi] and summed.
/// By Parseval this equals pi * ||reference - approx||_F^2, which is what
/// this function computes. Throws DomainError on non-finite input.
double total_error_energy(const Mat8& approx, const Mat8& reference);

/// Same quantity evaluated the slow way, by adaptive quadrature of the row
/// spectra with absolute tolerance `tol` per row. Kept as an independent
/// cross-check of the closed form.
double total_error_energy_quadrature(const Mat8& approx, const Mat8& reference,
                                     double tol = 1e-9);

/// Mean-square error of the orthonormal approximation against the exact DCT
/// for a Markov input: trace((C - Chat) R (C - Chat)^t) / 8.
double mse_markov(const Mat8& approx_orthonormal, const MarkovModel& model = {});

/// Unified coding gain in dB of an orthonormal transform for a Markov input:
/// -(10/8) * sum_k log10(A_k * B_k), with A_k the k-th diagonal entry of
/// Chat R Chat^t and B_k the squared norm of the k-th synthesis basis vector
/// (identically 1 for orthonormal transforms; computed from the columns).
/// Throws DomainError if any A_k is non-positive.
double coding_gain_db(const Mat8& orthonormal, const MarkovModel& model = {});

/// Transform efficiency in percent: with r = Chat R Chat^t,
/// 100 * sum_k |r[k][k]| / sum_kl |r[k][l]|. 100 means fully decorrelated.
double transform_efficiency(const Mat8& orthonormal, const MarkovModel& model = {});

/// Peak signal-to-noise ratio in dB for 8-bit images,
/// 10*log10(255^2 / mean squared pixel difference). Identical images return
/// +infinity. Throws DimensionError on size mismatch.
double psnr(const ImagePlane& reference, const ImagePlane& test);

/// Universal quality index: mean over all sliding windows of
/// Q = 4*s_xy*mx*my / ((s_x^2 + s_y^2) * (mx^2 + my^2)), in [-1, 1].
/// A window with zero variance on both sides contributes the luminance term
/// 2*mx*my / (mx^2 + my^2) alone, or 1 when both windows are all zero.
double uqi(const ImagePlane& reference, const ImagePlane& test, int window = 8);

}  // namespace dctapprox

#endif
