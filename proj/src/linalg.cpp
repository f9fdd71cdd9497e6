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

#include "dctapprox/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace dctapprox {

Mat8 matmul(const Mat8& a, const Mat8& b) {
    Mat8 out{};
    for (int i = 0; i < kN; ++i) {
        for (int k = 0; k < kN; ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (int j = 0; j < kN; ++j) out[i][j] += aik * b[k][j];
        }
    }
    return out;
}

Mat8 transpose(const Mat8& a) {
    Mat8 out{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[j][i] = a[i][j];
    return out;
}

Mat8 identity8() {
    Mat8 out{};
    for (int i = 0; i < kN; ++i) out[i][i] = 1.0;
    return out;
}

double max_abs_diff(const Mat8& a, const Mat8& b) {
    double m = 0.0;
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

double frobenius_sq(const Mat8& a) {
    double s = 0.0;
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) s += a[i][j] * a[i][j];
    return s;
}

bool all_finite(const Mat8& a) {
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j)
            if (!std::isfinite(a[i][j])) return false;
    return true;
}

Rational8x8 Rational8x8::identity() {
    Rational8x8 m;
    for (int i = 0; i < kN; ++i) m.num[i][i] = 1;
    return m;
}

void Rational8x8::reduce() {
    while (log2_den > 0) {
        for (const auto& row : num)
            for (long long v : row)
                if (v & 1) return;
        for (auto& row : num)
            for (long long& v : row) v /= 2;
        --log2_den;
    }
}

Mat8 Rational8x8::to_double() const {
    const double den = std::ldexp(1.0, log2_den);
    Mat8 out{};
    for (int i = 0; i < kN; ++i)
        for (int j = 0; j < kN; ++j) out[i][j] = double(num[i][j]) / den;
    return out;
}

bool Rational8x8::equal(const Rational8x8& other) const {
    Rational8x8 a = *this;
    Rational8x8 b = other;
    a.reduce();
    b.reduce();
    return a.log2_den == b.log2_den && a.num == b.num;
}

Rational8x8 rational_matmul(const Rational8x8& a, const Rational8x8& b) {
    Rational8x8 out;
    out.log2_den = a.log2_den + b.log2_den;
    for (int i = 0; i < kN; ++i)
        for (int k = 0; k < kN; ++k) {
            const long long aik = a.num[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < kN; ++j) out.num[i][j] += aik * b.num[k][j];
        }
    return out;
}

}  // namespace dctapprox
