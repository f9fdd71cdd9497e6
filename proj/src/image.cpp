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

#include "dctapprox/image.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace dctapprox {

namespace {

// Reads one whitespace-delimited header token, skipping '#' comment lines.
bool next_header_token(std::istream& in, std::string& token) {
    token.clear();
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    if (ch == EOF) return false;
    while (ch != EOF && !std::isspace(ch) && ch != '#') {
        token.push_back(char(ch));
        ch = in.get();
    }
    // leave the terminator in the stream; the caller owns the single
    // whitespace byte that separates header from payload
    if (ch != EOF) in.unget();
    return true;
}

int parse_header_int(std::istream& in, const char* field) {
    std::string token;
    if (!next_header_token(in, token))
        throw ParseError(std::string("pgm: truncated header, missing ") + field);
    try {
        std::size_t pos = 0;
        const int value = std::stoi(token, &pos);
        if (pos != token.size() || value < 0) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("pgm: malformed ") + field + " '" + token + "'");
    }
}

}  // namespace

ImagePlane load_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("pgm: cannot open '" + path.string() + "'");

    std::string magic;
    if (!next_header_token(in, magic) || magic != "P5")
        throw ParseError("pgm: bad magic '" + magic + "', expected binary P5");
    const int width = parse_header_int(in, "width");
    const int height = parse_header_int(in, "height");
    const int maxval = parse_header_int(in, "maxval");
    if (width <= 0 || height <= 0) throw ParseError("pgm: non-positive dimensions");
    if (maxval != 255)
        throw ParseError("pgm: unsupported maxval " + std::to_string(maxval) +
                         ", only 8-bit (255) planes are handled");

    // Exactly one whitespace byte separates the header from the payload.
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) throw ParseError("pgm: missing header separator");

    ImagePlane img(width, height);
    in.read(reinterpret_cast<char*>(img.samples.data()),
            std::streamsize(img.samples.size()));
    if (std::size_t(in.gcount()) != img.samples.size())
        throw ParseError("pgm: truncated payload in '" + path.string() + "'");
    return img;
}

void save_pgm(const ImagePlane& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("pgm: cannot write '" + path.string() + "'");
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.samples.data()),
              std::streamsize(image.samples.size()));
    if (!out) throw ParseError("pgm: short write to '" + path.string() + "'");
}

std::vector<std::filesystem::path> read_manifest(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw ParseError("manifest: cannot open '" + manifest.string() + "'");
    const std::filesystem::path base = manifest.parent_path();

    std::vector<std::filesystem::path> paths;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        std::string entry = line.substr(first, last - first + 1);
        if (entry.empty() || entry[0] == '#') continue;
        std::filesystem::path p(entry);
        paths.push_back(p.is_absolute() ? p : base / p);
    }
    return paths;
}

}  // namespace dctapprox
