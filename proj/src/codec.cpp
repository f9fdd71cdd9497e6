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

#include "dctapprox/codec.hpp"

#include <cmath>
#include <limits>

#include "dctapprox/metrics.hpp"

namespace dctapprox {

PreparedTransform prepare(const TransformSpec& spec) {
    PreparedTransform pt;
    pt.name = spec.name;
    pt.basis = orthogonal_matrix(spec);
    pt.scale = spec.scale;
    if (spec.id) pt.flow = flow_graph(spec);
    return pt;
}

PreparedTransform prepare_exact_dct() {
    PreparedTransform pt;
    pt.name = "exact";
    pt.basis = exact_dct().matrix;
    pt.scale.fill(1.0);
    return pt;
}

PreparedTransform prepare_dense(std::string name, const Mat8& orthonormal_basis) {
    PreparedTransform pt;
    pt.name = std::move(name);
    pt.basis = orthonormal_basis;
    pt.scale.fill(1.0);
    return pt;
}

const std::array<std::uint8_t, 64>& zigzag_order() {
    static const std::array<std::uint8_t, 64> order = [] {
        std::array<std::uint8_t, 64> o{};
        int pos = 0;
        for (int s = 0; s <= 14; ++s) {
            // odd anti-diagonals run down-left, even ones up-right
            if (s & 1) {
                for (int i = std::max(0, s - 7); i <= std::min(s, 7); ++i)
                    o[pos++] = std::uint8_t(i * 8 + (s - i));
            } else {
                for (int i = std::min(s, 7); i >= std::max(0, s - 7); --i)
                    o[pos++] = std::uint8_t(i * 8 + (s - i));
            }
        }
        return o;
    }();
    return order;
}

namespace {

Block dense_2d(const Block& block, const Mat8& left, const Mat8& right_t) {
    // left * block * right_t^t, all dense
    Block tmp{}, out{};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const double l = left[i][k];
            if (l == 0.0) continue;
            for (int j = 0; j < 8; ++j) tmp[i * 8 + j] += l * block[k * 8 + j];
        }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            double s = 0.0;
            for (int k = 0; k < 8; ++k) s += tmp[i * 8 + k] * right_t[j][k];
            out[i * 8 + j] = s;
        }
    return out;
}

}  // namespace

Block forward_2d(const Block& block, const PreparedTransform& t) {
    if (!t.flow) return dense_2d(block, t.basis, t.basis);

    // T applied to the 8 columns, then to the 8 rows, then the diagonal
    // scale folded in on both sides.
    Block tmp{};
    for (int j = 0; j < 8; ++j) {
        Vec8 col;
        for (int i = 0; i < 8; ++i) col[i] = block[i * 8 + j];
        const Vec8 y = apply_flow(*t.flow, col);
        for (int i = 0; i < 8; ++i) tmp[i * 8 + j] = y[i];
    }
    Block out{};
    for (int i = 0; i < 8; ++i) {
        Vec8 row;
        for (int j = 0; j < 8; ++j) row[j] = tmp[i * 8 + j];
        const Vec8 y = apply_flow(*t.flow, row);
        for (int j = 0; j < 8; ++j) out[i * 8 + j] = t.scale[i] * t.scale[j] * y[j];
    }
    return out;
}

Block inverse_2d(const Block& coeffs, const PreparedTransform& t) {
    return dense_2d(coeffs, transpose(t.basis), transpose(t.basis));
}

void zigzag_retain(Block& coeffs, const RetentionPolicy& policy) {
    if (policy.retained < 1 || policy.retained > 64)
        throw ParameterError("retention level must lie in 1..64");
    const auto& order = zigzag_order();
    for (int k = policy.retained; k < 64; ++k) coeffs[order[k]] = 0.0;
}

namespace {

void require_blockable(const ImagePlane& image) {
    if (image.width % 8 != 0 || image.height % 8 != 0 || image.width == 0 || image.height == 0)
        throw DimensionError("image dimensions must be positive multiples of 8");
}

std::uint8_t to_pixel(double v) {
    // round half away from zero, clamp to the 8-bit range
    const double r = std::round(v);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return std::uint8_t(r);
}

}  // namespace

std::vector<Block> forward_blocks(const ImagePlane& image, const PreparedTransform& t) {
    require_blockable(image);
    const int bw = image.width / 8;
    const int bh = image.height / 8;
    std::vector<Block> out;
    out.reserve(std::size_t(bw) * bh);
    for (int br = 0; br < bh; ++br)
        for (int bc = 0; bc < bw; ++bc) {
            Block b;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    b[i * 8 + j] = double(image.at(br * 8 + i, bc * 8 + j));
            out.push_back(forward_2d(b, t));
        }
    return out;
}

ImagePlane reconstruct_image(std::span<const Block> coeffs, int width, int height,
                             const PreparedTransform& t, int retained) {
    ImagePlane out(width, height);
    const int bw = width / 8;
    const RetentionPolicy policy{retained};
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        Block b = coeffs[n];
        zigzag_retain(b, policy);
        b = inverse_2d(b, t);
        const int br = int(n) / bw;
        const int bc = int(n) % bw;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                out.at(br * 8 + i, bc * 8 + j) = to_pixel(b[i * 8 + j]);
    }
    return out;
}

CompressionResult compress_image(const ImagePlane& image, const PreparedTransform& t,
                                 const RetentionPolicy& policy) {
    if (policy.retained < 1 || policy.retained > 64)
        throw ParameterError("retention level must lie in 1..64");
    const std::vector<Block> coeffs = forward_blocks(image, t);
    CompressionResult result;
    result.reconstructed = reconstruct_image(coeffs, image.width, image.height, t, policy.retained);
    result.psnr = psnr(image, result.reconstructed);
    result.uqi = uqi(image, result.reconstructed);
    return result;
}

CorpusAverage corpus_average(std::span<const ImagePlane> corpus, const PreparedTransform& t,
                             int retained) {
    if (corpus.empty()) throw ParameterError("corpus is empty");
    CorpusAverage avg;
    double psnr_sum = 0.0;
    double uqi_sum = 0.0;
    int psnr_count = 0;
    for (const ImagePlane& image : corpus) {
        const CompressionResult r = compress_image(image, t, RetentionPolicy{retained});
        if (std::isinf(r.psnr)) {
            ++avg.n_psnr_excluded;
        } else {
            psnr_sum += r.psnr;
            ++psnr_count;
        }
        uqi_sum += r.uqi;
        ++avg.n_images;
    }
    avg.avg_psnr = psnr_count > 0 ? psnr_sum / psnr_count
                                  : std::numeric_limits<double>::infinity();
    avg.avg_uqi = uqi_sum / avg.n_images;
    return avg;
}

}  // namespace dctapprox
