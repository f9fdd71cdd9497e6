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

#include "dctapprox/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace dctapprox {

std::string format_sig(double value, int significant) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, value);
    return buf;
}

Corpus load_corpus(const std::filesystem::path& manifest) {
    Corpus corpus;
    for (const std::filesystem::path& path : read_manifest(manifest)) {
        corpus.images.push_back(load_pgm(path));
        corpus.names.push_back(path.filename().string());
    }
    return corpus;
}

void write_metrics_csv(std::ostream& out, std::span<const PreparedTransform> transforms,
                       const MarkovModel& model, const Corpus* corpus, int retained) {
    out << "transform,epsilon,mse,cg,eta";
    const bool with_corpus = corpus != nullptr && !corpus->empty();
    if (with_corpus) out << ",avg_psnr,avg_uqi,n_images,n_psnr_excluded";
    out << "\n";

    const Mat8& reference = exact_dct().matrix;
    for (const PreparedTransform& t : transforms) {
        out << t.name << "," << format_sig(total_error_energy(t.basis, reference)) << ","
            << format_sig(mse_markov(t.basis, model)) << ","
            << format_sig(coding_gain_db(t.basis, model)) << ","
            << format_sig(transform_efficiency(t.basis, model));
        if (with_corpus) {
            const CorpusAverage avg = corpus_average(corpus->images, t, retained);
            out << "," << format_sig(avg.avg_psnr) << "," << format_sig(avg.avg_uqi) << ","
                << avg.n_images << "," << avg.n_psnr_excluded;
        }
        out << "\n";
    }
}

void write_sweep_csv(std::ostream& out, std::span<const PreparedTransform> transforms,
                     const Corpus& corpus, int r_first, int r_last) {
    if (corpus.empty()) throw ParameterError("sweep requires a corpus");
    if (r_first < 1 || r_last > 64 || r_first > r_last)
        throw ParameterError("retention range must satisfy 1 <= first <= last <= 64");

    out << "transform,r,avg_psnr,avg_uqi,n_images,n_psnr_excluded\n";
    for (const PreparedTransform& t : transforms) {
        // one forward pass per image, reused across every retention level
        std::vector<std::vector<Block>> coeffs;
        coeffs.reserve(corpus.images.size());
        for (const ImagePlane& img : corpus.images) coeffs.push_back(forward_blocks(img, t));

        for (int r = r_first; r <= r_last; ++r) {
            double psnr_sum = 0.0, uqi_sum = 0.0;
            int psnr_count = 0, excluded = 0;
            for (std::size_t i = 0; i < corpus.images.size(); ++i) {
                const ImagePlane& original = corpus.images[i];
                const ImagePlane recon =
                    reconstruct_image(coeffs[i], original.width, original.height, t, r);
                const double p = psnr(original, recon);
                if (std::isinf(p)) {
                    ++excluded;
                } else {
                    psnr_sum += p;
                    ++psnr_count;
                }
                uqi_sum += uqi(original, recon);
            }
            const double avg_psnr = psnr_count > 0 ? psnr_sum / psnr_count
                                                   : std::numeric_limits<double>::infinity();
            out << t.name << "," << r << "," << format_sig(avg_psnr) << ","
                << format_sig(uqi_sum / double(corpus.images.size())) << ","
                << corpus.images.size() << "," << excluded << "\n";
        }
    }
}

void write_search_csv(std::ostream& out, const SearchResult& result) {
    out << "a0,a1,a2,a3,a4,a5,a6,cost_adds,cost_shifts,orthogonal,psnr_r" << result.retained
        << "\n";
    for (const CandidateRecord& rec : result.candidates) {
        for (int v : rec.params.a) out << v << ",";
        out << rec.cost.adds << "," << rec.cost.shifts << "," << (rec.orthogonal ? 1 : 0) << ",";
        if (result.ranked_by_psnr) {
            for (const RankedWinner& w : result.ranked)
                if (w.params == rec.params) {
                    out << format_sig(w.rank_value);
                    break;
                }
        }
        out << "\n";
    }
}

std::string search_summary(const SearchResult& result) {
    std::ostringstream os;
    os << "minimal cost " << result.minimal_cost << " (adds + shifts), " << result.winners.size()
       << " orthogonal winner(s)\n";
    os << "ranking: "
       << (result.ranked_by_psnr
               ? "average corpus PSNR at r = " + std::to_string(result.retained) +
                     ", best first"
               : "FALLBACK - no corpus configured, ascending MSE against the exact DCT")
       << "\n";
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
        const RankedWinner& w = result.ranked[i];
        const OpCount cost = candidate_cost(w.params);
        os << "  " << (i + 1) << ". " << candidate_name(w.params) << "  adds=" << cost.adds
           << " shifts=" << cost.shifts << "  "
           << (result.ranked_by_psnr ? "psnr=" : "mse=") << format_sig(w.rank_value) << "\n";
    }
    return os.str();
}

void write_fixedpoint_csv(std::ostream& out, std::span<const VerifyStats> rows) {
    out << "transform,L,n_vectors,mismatches,max_stage_width,inexact_shift_events\n";
    for (const VerifyStats& row : rows)
        out << row.transform << "," << row.word_length << "," << row.n_vectors << ","
            << row.mismatches << "," << row.max_stage_width << "," << row.inexact_shift_events
            << "\n";
}

}  // namespace dctapprox
