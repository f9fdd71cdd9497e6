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

#ifndef DCTAPPROX_IMAGE_HPP
#define DCTAPPROX_IMAGE_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "dctapprox/common.hpp"

namespace dctapprox {

/// 8-bit grayscale raster, row-major.
struct ImagePlane {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;

    ImagePlane() = default;
    ImagePlane(int w, int h) : width(w), height(h), samples(std::size_t(w) * h, 0) {}

    std::uint8_t at(int row, int col) const { return samples[std::size_t(row) * width + col]; }
    std::uint8_t& at(int row, int col) { return samples[std::size_t(row) * width + col]; }
    bool same_size(const ImagePlane& other) const {
        return width == other.width && height == other.height;
    }
    bool operator==(const ImagePlane&) const = default;
};

/// Read a binary PGM (P5) file with maxval 255. Throws ParseError on a bad
/// magic, malformed header, unsupported maxval, or truncated payload.
ImagePlane load_pgm(const std::filesystem::path& path);

/// Write a binary PGM (P5) file, maxval 255. save then load is byte-exact.
void save_pgm(const ImagePlane& image, const std::filesystem::path& path);

/// Parse a corpus manifest: one path per line, blank lines and lines
/// starting with '#' ignored. Relative paths resolve against the manifest's
/// directory.
std::vector<std::filesystem::path> read_manifest(const std::filesystem::path& manifest);

}  // namespace dctapprox

#endif
