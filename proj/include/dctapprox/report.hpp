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

#ifndef DCTAPPROX_REPORT_HPP
#define DCTAPPROX_REPORT_HPP

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dctapprox/codec.hpp"
#include "dctapprox/fixedpoint.hpp"
#include "dctapprox/metrics.hpp"
#include "dctapprox/search.hpp"

namespace dctapprox {

/// Fixed-width float formatting for CSV output: 6 significant digits,
/// "inf" for the infinite-PSNR sentinel. Byte-stable across runs.
std::string format_sig(double value, int significant = 6);

struct Corpus {
    std::vector<ImagePlane> images;
    std::vector<std::string> names;
    bool empty() const { return images.empty(); }
};

Corpus load_corpus(const std::filesystem::path& manifest);

/// transform,epsilon,mse,cg,eta[,avg_psnr,avg_uqi,n_images,n_psnr_excluded]
/// One row per prepared transform; the trailing columns appear when a corpus
/// is given (retention level `retained`).
void write_metrics_csv(std::ostream& out, std::span<const PreparedTransform> transforms,
                       const MarkovModel& model, const Corpus* corpus, int retained);

/// transform,r,avg_psnr,avg_uqi,n_images,n_psnr_excluded
/// for r in [r_first, r_last]; each image is forward-transformed once per
/// transform and reconstructed per retention level.
void write_sweep_csv(std::ostream& out, std::span<const PreparedTransform> transforms,
                     const Corpus& corpus, int r_first, int r_last);

/// a0,a1,a2,a3,a4,a5,a6,cost_adds,cost_shifts,orthogonal,psnr_r10
/// All 2187 candidates; psnr_r10 is filled only for PSNR-ranked winners.
void write_search_csv(std::ostream& out, const SearchResult& result);

/// Human-readable winners summary, stating the ranking basis.
std::string search_summary(const SearchResult& result);

/// transform,L,n_vectors,mismatches,max_stage_width,inexact_shift_events
void write_fixedpoint_csv(std::ostream& out, std::span<const VerifyStats> rows);

}  // namespace dctapprox

#endif
