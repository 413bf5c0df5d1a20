#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chowlab {

enum class EntryStatus { Pass, Fail, RecordedException };

struct ReportEntry {
    std::string id;        // stable key, e.g. "lemma2.count"
    std::string claim;     // the mathematical statement being checked
    std::string expected;  // exact value or predicate
    std::string computed;
    std::string witness;   // optional supporting data (integer matrices as JSON)
    EntryStatus status = EntryStatus::Pass;
    long long runtime_ms = 0;
};

struct ReportOptions {
    std::uint64_t prime = 1009;
    std::uint64_t seed = 0;
    // Sample counts; the defaults are the sizes the deterministic suite runs.
    int orbit_samples = 1000;
    int kernel_samples = 100;
    int flambda_samples = 100;
    int graph_samples = 200;
    int cayley_points = 50;
    int lr_weight_bound = 10;
    bool include_stretch = true;
};

// Every reproducible claim, executed in a fixed order. Individual failures are
// recorded, never thrown. Deterministic for fixed (prime, seed).
std::vector<ReportEntry> run_all(const ReportOptions& options);

// Named slices of the suite, for targeted runs.
std::vector<ReportEntry> run_lemma2();
std::vector<ReportEntry> run_d4_degrees();
std::vector<ReportEntry> run_series_suite();
std::vector<ReportEntry> run_lr_oracle(int weight_bound);
std::vector<ReportEntry> run_duality_suite();
std::vector<ReportEntry> run_orbit_suite(const ReportOptions& options);
std::vector<ReportEntry> run_kernel_suite(const ReportOptions& options);
std::vector<ReportEntry> run_flambda_suite(const ReportOptions& options);
std::vector<ReportEntry> run_graph_suite(const ReportOptions& options);
std::vector<ReportEntry> run_cayley_suite(const ReportOptions& options);
std::vector<ReportEntry> run_euler_stretch();

bool all_pass(const std::vector<ReportEntry>& entries);

// Aligned text table, including runtimes.
std::string emit_text(const std::vector<ReportEntry>& entries);

// Byte-deterministic for fixed inputs; runtimes are included only on request
// since they vary between runs.
std::string emit_json(const std::vector<ReportEntry>& entries, const ReportOptions& options,
                      bool with_timings = false);

}  // namespace chowlab
