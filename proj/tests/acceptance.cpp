// Acceptance suite: one line per criterion, fixed tolerances (all exact),
// deterministic at (prime, seed) = (1009, 0). Exit status is nonzero when any
// gating criterion fails; the final Euler-number cross-check is informational.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chowlab/report.hpp"

namespace {

using chowlab::EntryStatus;
using chowlab::ReportEntry;

struct Criterion {
    std::string name;
    bool gating = true;
    std::function<bool()> run;
};

bool entries_pass(const std::vector<ReportEntry>& entries,
                  const std::vector<std::string>& required_ids = {}) {
    std::map<std::string, const ReportEntry*> by_id;
    for (const auto& e : entries) {
        if (e.status == EntryStatus::Fail) return false;
        by_id[e.id] = &e;
    }
    for (const auto& id : required_ids)
        if (!by_id.count(id)) return false;
    return true;
}

const ReportEntry* find_entry(const std::vector<ReportEntry>& entries, const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace

int main() {
    using chowlab::ReportOptions;
    ReportOptions options;  // prime 1009, seed 0, criterion sample sizes

    std::vector<Criterion> criteria;

    criteria.push_back({"criterion-01 staircase class and count of common zero 5-spaces",
                        true, [&]() {
                            const auto entries = chowlab::run_lemma2();
                            if (!entries_pass(entries,
                                              {"lemma2.c10_wedge2", "lemma2.count"}))
                                return false;
                            const auto* count = find_entry(entries, "lemma2.count");
                            return count && count->computed == "9";
                        }});

    criteria.push_back({"criterion-02 degrees 432 (two routes), 12, and 12 = 2 x 6", true,
                        [&]() {
                            const auto entries = chowlab::run_d4_degrees();
                            return entries_pass(entries,
                                                {"d4.degree_110", "d4.porteous_110",
                                                 "d4.degree_100", "d4.projection_degree"});
                        }});

    criteria.push_back({"criterion-03 determinant weight (4,4,4) and kernel c1 = -9h", true,
                        [&]() {
                            const auto entries = chowlab::run_d4_degrees();
                            const auto* c1 = find_entry(entries, "d4.c1");
                            const auto* kernel = find_entry(entries, "f4.kernel_c1");
                            return c1 && kernel && c1->status == EntryStatus::Pass &&
                                   kernel->status == EntryStatus::Pass;
                        }});

    criteria.push_back({"criterion-04 series table formulas with the recorded index exception",
                        true, [&]() {
                            const auto entries = chowlab::run_series_suite();
                            if (!entries_pass(entries)) return false;
                            const auto* e7 = find_entry(entries, "series.E7.index_x");
                            if (!e7 || e7->status != EntryStatus::RecordedException)
                                return false;
                            const auto* h0 = find_entry(entries, "series.F4.h0_dim");
                            return h0 && h0->computed == "75" &&
                                   h0->status == EntryStatus::Pass;
                        }});

    criteria.push_back({"criterion-05 zero-locus dimension 4 in all four constructions", true,
                        [&]() {
                            const auto entries = chowlab::run_series_suite();
                            for (const char* id :
                                 {"series.G2.zero_locus_dim", "series.D4.zero_locus_dim",
                                  "series.F4.zero_locus_dim", "series.E6.zero_locus_dim"}) {
                                const auto* e = find_entry(entries, id);
                                if (!e || e->status != EntryStatus::Pass || e->computed != "4")
                                    return false;
                            }
                            return true;
                        }});

    criteria.push_back({"criterion-06 product coefficients match brute-force enumeration",
                        true, [&]() {
                            return entries_pass(chowlab::run_lr_oracle(options.lr_weight_bound),
                                                {"lr.oracle_sweep"});
                        }});

    criteria.push_back({"criterion-07 duality pairing is a permutation matrix on boxes to 5x4",
                        true, [&]() {
                            return entries_pass(chowlab::run_duality_suite(),
                                                {"duality.pairing"});
                        }});

    criteria.push_back({"criterion-08 orbit ranks, contraction kernels, wedge dimensions",
                        true, [&]() {
                            return entries_pass(chowlab::run_orbit_suite(options)) &&
                                   entries_pass(chowlab::run_kernel_suite(options)) &&
                                   entries_pass(chowlab::run_flambda_suite(options));
                        }});

    criteria.push_back({"criterion-09 graph membership identity on 200 samples and witnesses",
                        true, [&]() {
                            return entries_pass(chowlab::run_graph_suite(options),
                                                {"graph.identity", "graph.zero_functional",
                                                 "graph.constructed_vanishing"});
                        }});

    criteria.push_back({"criterion-10 surface sampling, unique third lines, closing triality",
                        true, [&]() {
                            return entries_pass(chowlab::run_cayley_suite(options),
                                                {"cayley.points", "cayley.next_line",
                                                 "cayley.triality_closes",
                                                 "cayley.triality_nontrivial",
                                                 "cayley.plane_triples"});
                        }});

    criteria.push_back({"criterion-11 Euler number 324 against the series oracle (stretch)",
                        false, [&]() { return entries_pass(chowlab::run_euler_stretch()); }});

    bool gating_ok = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            std::printf("[FAIL] %s  (exception: %s)\n", criterion.name.c_str(), e.what());
            if (criterion.gating) gating_ok = false;
            continue;
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("[%s] %s  (%lld ms)\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                    static_cast<long long>(ms));
        if (!ok && criterion.gating) gating_ok = false;
    }
    return gating_ok ? 0 : 1;
}
