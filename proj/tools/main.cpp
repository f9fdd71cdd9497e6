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

// Command-line front end: list the transform suite, verify its invariants,
// emit proximity/coding metrics and compression sweeps, run the design-space
// search, and run the fixed-point verification protocol.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dctapprox/codec.hpp"
#include "dctapprox/fixedpoint.hpp"
#include "dctapprox/metrics.hpp"
#include "dctapprox/report.hpp"
#include "dctapprox/search.hpp"
#include "dctapprox/transform.hpp"

namespace {

using namespace dctapprox;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// "N" or "A..B"
std::pair<int, int> parse_retention_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int r = std::stoi(text);
            return {r, r};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParameterError("cannot parse retention '" + text + "' (expected N or A..B)");
    }
}

std::vector<PreparedTransform> resolve_transforms(const std::string& selector_csv,
                                                  bool include_exact_by_default) {
    std::vector<PreparedTransform> out;
    if (selector_csv.empty()) {
        if (include_exact_by_default) out.push_back(prepare_exact_dct());
        for (const TransformSpec& spec : catalog_all()) out.push_back(prepare(spec));
        return out;
    }
    for (const std::string& name : split_list(selector_csv)) {
        if (name == "exact")
            out.push_back(prepare_exact_dct());
        else
            out.push_back(prepare(catalog_by_selector(name)));
    }
    return out;
}

// Sink that writes to --out when given, stdout otherwise.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

int cmd_list() {
    std::printf("%-22s %5s %5s %6s %6s\n", "transform", "mult", "add", "shift", "total");
    // Reference costs of the exact transform, for scale: straight from the
    // definition, and via the classic 5-multiplication fast algorithm.
    std::printf("%-22s %5d %5d %6d %6d\n", "exact (definition)", 64, 56, 0, 120);
    std::printf("%-22s %5d %5d %6d %6d\n", "exact (fast, 5-mult)", 5, 29, 0, 34);
    for (const TransformSpec& spec : catalog_all()) {
        const OpCount ops = count_ops(flow_graph(spec));
        std::printf("%-22s %5d %5d %6d %6d\n", spec.name.c_str(), ops.mults, ops.adds, ops.shifts,
                    ops.total());
    }
    return 0;
}

struct ExpectedOps {
    const char* name;
    int adds;
    int shifts;
};

// Pinned arithmetic costs of the factorized flows.
constexpr ExpectedOps kExpectedOps[] = {
    {"bas2008", 18, 2},     {"bas2011_a0", 16, 0},    {"bas2011_a1", 18, 0},
    {"bas2011_a2", 18, 2},  {"cb2011", 22, 0},        {"modcb2011", 14, 0},
    {"multibeam2012", 24, 6}, {"proposed", 14, 0},
};

int cmd_verify() {
    int failures = 0;
    const auto check = [&failures](bool ok, const std::string& what) {
        std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
        if (!ok) ++failures;
    };

    const Mat8& c = exact_dct().matrix;
    check(max_abs_diff(matmul(c, transpose(c)), identity8()) < 1e-12, "exact dct orthonormal");
    bool row0_const = true;
    for (int j = 0; j < 8; ++j)
        if (std::abs(c[0][j] - 1.0 / std::sqrt(8.0)) > 1e-15) row0_const = false;
    check(row0_const, "exact dct row 0 constant");

    for (const TransformSpec& spec : catalog_all()) {
        const FlowGraph flow = flow_graph(spec);

        Rational8x8 t;
        t.log2_den = 1;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) t.num[i][j] = spec.t_num2[i][j];
        check(flow_to_matrix(flow).equal(t), spec.name + ": factorization is exact");

        const Mat8 chat = orthogonal_matrix(spec);
        check(max_abs_diff(matmul(chat, transpose(chat)), identity8()) < 1e-12,
              spec.name + ": scaled transform orthonormal");

        const OpCount ops = count_ops(flow);
        bool ops_ok = false;
        for (const ExpectedOps& e : kExpectedOps)
            if (spec.name == e.name)
                ops_ok = (ops.mults == 0 && ops.adds == e.adds && ops.shifts == e.shifts);
        check(ops_ok, spec.name + ": op count " + std::to_string(ops.adds) + "+" +
                          std::to_string(ops.shifts) + " shifts matches");

        // flow output against the dense matrix on a deterministic batch
        bool flow_ok = true;
        SplitMix64 rng(7);
        for (int n = 0; n < 200 && flow_ok; ++n) {
            Vec8 x;
            for (double& v : x) v = double(int(rng.next() % 2001) - 1000);
            const Vec8 y = apply_flow(flow, x);
            for (int i = 0; i < 8; ++i) {
                double dense = 0.0;
                for (int j = 0; j < 8; ++j) dense += spec.t_at(i, j) * x[j];
                if (std::abs(dense - y[i]) > 1e-9) flow_ok = false;
            }
        }
        check(flow_ok, spec.name + ": flow matches dense product");

        const VerifyStats stats = verify_flow(spec, 12, 1000, 99);
        check(stats.mismatches == 0 && stats.peak_bound_violations == 0,
              spec.name + ": integer datapath matches reference");
    }

    std::printf("%s\n", failures == 0 ? "all checks passed" : "checks FAILED");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplierless 8-point DCT approximation suite"};
    app.require_subcommand(1);

    std::string transforms_csv;
    std::string corpus_path;
    std::string out_path;
    std::string retention_text;
    std::string wordlen_csv = "4,8,12,16";
    std::uint64_t seed = 1;
    int vector_count = 10000;
    std::string input_pgm;

    CLI::App* list = app.add_subcommand("list", "transforms and their arithmetic cost");
    CLI::App* verify = app.add_subcommand("verify", "run the library's invariant checks");

    CLI::App* metrics = app.add_subcommand("metrics", "proximity and coding metrics as CSV");
    metrics->add_option("--transform", transforms_csv, "comma-separated transform names");
    metrics->add_option("--corpus", corpus_path, "corpus manifest for PSNR/UQI columns");
    metrics->add_option("--out", out_path, "output file (default stdout)");
    metrics->add_option("--r", retention_text, "retention level for corpus columns (default 10)");

    CLI::App* sweep = app.add_subcommand("sweep", "PSNR/UQI per retention level as CSV");
    sweep->add_option("--transform", transforms_csv, "comma-separated transform names");
    sweep->add_option("--corpus", corpus_path, "corpus manifest")->required();
    sweep->add_option("--out", out_path, "output file (default stdout)");
    sweep->add_option("--r", retention_text, "retention range, e.g. 2..20 (default)");

    CLI::App* compress = app.add_subcommand("compress", "compress one PGM image");
    compress->add_option("input", input_pgm, "input PGM (P5)")->required();
    compress->add_option("--transform", transforms_csv, "transform name (default proposed)");
    compress->add_option("--out", out_path, "reconstructed PGM path");
    compress->add_option("--r", retention_text, "retention level (default 10)");

    CLI::App* search = app.add_subcommand("search", "exhaustive design-space search");
    search->add_option("--corpus", corpus_path, "corpus manifest for PSNR ranking");
    search->add_option("--out", out_path, "CSV output file (default stdout)");
    search->add_option("--r", retention_text, "retention level for ranking (default 10)");

    CLI::App* fixedpoint = app.add_subcommand("fixedpoint", "integer datapath verification");
    fixedpoint->add_option("--transform", transforms_csv, "comma-separated transform names");
    fixedpoint->add_option("--wordlen", wordlen_csv, "word lengths (default 4,8,12,16)");
    fixedpoint->add_option("--seed", seed, "test vector generator seed (default 1)");
    fixedpoint->add_option("--count", vector_count, "vectors per transform and word length");
    fixedpoint->add_option("--out", out_path, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) return cmd_list();
        if (verify->parsed()) return cmd_verify();

        if (metrics->parsed()) {
            const auto prepared = resolve_transforms(transforms_csv, true);
            std::optional<Corpus> corpus;
            if (!corpus_path.empty()) {
                // an unusable corpus downgrades to corpus-free columns
                try {
                    corpus = load_corpus(corpus_path);
                } catch (const Error& e) {
                    std::cerr << "warning: corpus unavailable (" << e.what()
                              << "); emitting corpus-free columns only\n";
                }
            }
            if (corpus && corpus->empty()) {
                std::cerr << "warning: corpus manifest lists no images; emitting corpus-free "
                             "columns only\n";
                corpus.reset();
            }
            const int r = retention_text.empty() ? 10 : parse_retention_range(retention_text).first;
            OutputSink sink(out_path);
            write_metrics_csv(sink.stream(), prepared, MarkovModel{},
                              corpus ? &*corpus : nullptr, r);
            return 0;
        }

        if (sweep->parsed()) {
            const auto prepared = resolve_transforms(transforms_csv, true);
            const Corpus corpus = load_corpus(corpus_path);
            auto [r_first, r_last] = retention_text.empty()
                                         ? std::pair<int, int>{2, 20}
                                         : parse_retention_range(retention_text);
            OutputSink sink(out_path);
            write_sweep_csv(sink.stream(), prepared, corpus, r_first, r_last);
            return 0;
        }

        if (compress->parsed()) {
            const std::string name = transforms_csv.empty() ? "proposed" : transforms_csv;
            const PreparedTransform t = name == "exact"
                                            ? prepare_exact_dct()
                                            : prepare(catalog_by_selector(name));
            const int r = retention_text.empty() ? 10 : parse_retention_range(retention_text).first;
            const ImagePlane image = load_pgm(input_pgm);
            const CompressionResult result = compress_image(image, t, RetentionPolicy{r});
            if (!out_path.empty()) save_pgm(result.reconstructed, out_path);
            std::printf("transform,r,psnr,uqi\n%s,%d,%s,%s\n", t.name.c_str(), r,
                        format_sig(result.psnr).c_str(), format_sig(result.uqi).c_str());
            return 0;
        }

        if (search->parsed()) {
            std::optional<Corpus> corpus;
            if (!corpus_path.empty()) corpus = load_corpus(corpus_path);
            const int r = retention_text.empty() ? 10 : parse_retention_range(retention_text).first;
            const SearchResult result = run_search(
                corpus ? std::span<const ImagePlane>(corpus->images) : std::span<const ImagePlane>{},
                r);
            OutputSink sink(out_path);
            write_search_csv(sink.stream(), result);
            // keep the human-readable summary off the CSV stream
            (sink.to_file() ? std::cout : std::cerr) << search_summary(result);

            const bool has_proposed =
                std::any_of(result.winners.begin(), result.winners.end(),
                            [](const CandidateParams& w) {
                                return w.a == std::array<int, 7>{0, 1, 1, 1, 0, 0, 0};
                            });
            if (!has_proposed) {
                std::cerr << "error: the minimal-cost winner set lost the proposed transform\n";
                return 1;
            }
            return 0;
        }

        if (fixedpoint->parsed()) {
            std::vector<TransformSpec> specs;
            if (transforms_csv.empty()) {
                specs = catalog_all();
            } else {
                for (const std::string& name : split_list(transforms_csv))
                    specs.push_back(catalog_by_selector(name));
            }
            std::vector<VerifyStats> rows;
            for (const TransformSpec& spec : specs)
                for (const std::string& wl : split_list(wordlen_csv))
                    rows.push_back(verify_flow(spec, std::stoi(wl), vector_count, seed));
            OutputSink sink(out_path);
            write_fixedpoint_csv(sink.stream(), rows);

            long long mismatches = 0, violations = 0;
            for (const VerifyStats& row : rows) {
                mismatches += row.mismatches;
                violations += row.peak_bound_violations;
            }
            if (mismatches != 0 || violations != 0) {
                std::cerr << "error: " << mismatches << " mismatch(es), " << violations
                          << " width-bound violation(s)\n";
                return 1;
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
