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

#ifndef DCTAPPROX_CODEC_HPP
#define DCTAPPROX_CODEC_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dctapprox/image.hpp"
#include "dctapprox/transform.hpp"

namespace dctapprox {

/// 8x8 block of reals, row-major.
using Block = std::array<double, 64>;

/// Keep the first `retained` coefficients of the standard zigzag scan,
/// zero the rest. 1 <= retained <= 64.
struct RetentionPolicy {
    int retained = 10;
};

/// A transform readied for 2-D block work: the orthonormal basis for the
/// dense path, plus the additions-only 1-D flow when the transform has one
/// (catalog transforms do; search candidates do not).
struct PreparedTransform {
    std::string name;
    Mat8 basis{};  // orthonormal analysis matrix
    std::optional<FlowGraph> flow;
    Vec8 scale{};  // diagonal folded in after the flow
};

PreparedTransform prepare(const TransformSpec& spec);
PreparedTransform prepare_exact_dct();
PreparedTransform prepare_dense(std::string name, const Mat8& orthonormal_basis);

/// Block indices (row*8 + col) in standard zigzag scan order:
/// (0,0), (0,1), (1,0), (2,0), (1,1), (0,2), ...
const std::array<std::uint8_t, 64>& zigzag_order();

/// 2-D transform of one block: basis * block * basis^t. Runs as 16 calls of
/// the 1-D flow (8 columns, then 8 rows) with the diagonal scale folded in
/// afterward; falls back to dense products when no flow is available.
Block forward_2d(const Block& block, const PreparedTransform& t);

/// Inverse 2-D transform: basis^t * coeffs * basis.
Block inverse_2d(const Block& coeffs, const PreparedTransform& t);

/// Zero all coefficients past the retention cutoff, in place.
/// Throws ParameterError when retained is outside 1..64.
void zigzag_retain(Block& coeffs, const RetentionPolicy& policy);

struct CompressionResult {
    ImagePlane reconstructed;
    double psnr = 0;
    double uqi = 0;
};

/// JPEG-like harness: per 8x8 block, forward transform, zigzag retention,
/// inverse transform; reconstruction rounded half-away-from-zero and clamped
/// to [0, 255]; quality measured against the original. No level shift is
/// applied. Width and height must be divisible by 8.
CompressionResult compress_image(const ImagePlane& image, const PreparedTransform& t,
                                 const RetentionPolicy& policy);

struct CorpusAverage {
    double avg_psnr = 0;
    double avg_uqi = 0;
    int n_images = 0;
    int n_psnr_excluded = 0;  // images whose reconstruction was exact
};

/// Arithmetic mean of per-image PSNR and UQI over a corpus. Images that
/// reconstruct exactly (infinite PSNR) are left out of the PSNR mean and
/// counted in n_psnr_excluded. Throws ParameterError on an empty corpus.
CorpusAverage corpus_average(std::span<const ImagePlane> corpus, const PreparedTransform& t,
                             int retained);

/// Forward-transform every 8x8 block of an image (blocks in row-major block
/// order). Lets retention sweeps reuse one forward pass.
std::vector<Block> forward_blocks(const ImagePlane& image, const PreparedTransform& t);

/// Rebuild an image from forward coefficients at a given retention level.
ImagePlane reconstruct_image(std::span<const Block> coeffs, int width, int height,
                             const PreparedTransform& t, int retained);

}  // namespace dctapprox

#endif
