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

#ifndef DCTAPPROX_LINALG_HPP
#define DCTAPPROX_LINALG_HPP

#include <array>
#include <cstdint>

namespace dctapprox {

inline constexpr int kN = 8;  // all transforms in this library are 8-point

using Vec8 = std::array<double, 8>;
using Mat8 = std::array<Vec8, 8>;
using IntMat8 = std::array<std::array<int, 8>, 8>;

Mat8 matmul(const Mat8& a, const Mat8& b);
Mat8 transpose(const Mat8& a);
Mat8 identity8();

/// max_ij |a[i][j] - b[i][j]|
double max_abs_diff(const Mat8& a, const Mat8& b);

/// sum of squared entries
double frobenius_sq(const Mat8& a);

bool all_finite(const Mat8& a);

/// 8x8 matrix with integer numerators over a power-of-two denominator.
/// Exact arithmetic for composing sparse stages whose coefficients live in
/// {0, +-1/2, +-1, +-2}; products stay well inside 64-bit range.
struct Rational8x8 {
    std::array<std::array<long long, 8>, 8> num{};
    int log2_den = 0;

    static Rational8x8 identity();

    /// Strip factors of two shared by every numerator.
    void reduce();

    Mat8 to_double() const;

    bool equal(const Rational8x8& other) const;
};

Rational8x8 rational_matmul(const Rational8x8& a, const Rational8x8& b);

}  // namespace dctapprox

#endif
