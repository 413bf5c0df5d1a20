// Command-line front end: symbolic Schubert-calculus queries plus the
// deterministic verification suites, with a one-shot `reproduce-all` report.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

#include "chowlab/grammar.hpp"
#include "chowlab/report.hpp"
#include "chowlab/series.hpp"

namespace {

using namespace chowlab;

int emit_entries(const std::vector<ReportEntry>& entries, const ReportOptions& options,
                 bool json, bool timings) {
    if (json)
        std::cout << emit_json(entries, options, timings);
    else
        std::cout << emit_text(entries);
    return all_pass(entries) ? 0 : 1;
}

// Classes serialize as a list of {tuple, coefficient}; every integer is an
// exact decimal string and every partition a JSON array of decreasing parts.
nlohmann::ordered_json class_to_json(const SchubertClass& c) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [tuple, coeff] : c.terms()) {
        nlohmann::ordered_json slots = nlohmann::ordered_json::array();
        for (const auto& p : tuple.entries) slots.push_back(p.parts());
        terms.push_back({{"tuple", std::move(slots)}, {"coefficient", coeff.str()}});
    }
    nlohmann::ordered_json out;
    out["ring"] = c.ring().to_string();
    out["terms"] = std::move(terms);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chowlab: exact Schubert calculus and verification suites"};
    app.require_subcommand(1);

    ReportOptions options;
    bool json = false;
    bool timings = false;

    auto add_common = [&](CLI::App* cmd, bool with_sampling) {
        cmd->add_flag("--json", json, "emit JSON instead of text");
        if (with_sampling) {
            cmd->add_option("--prime", options.prime, "field characteristic (prime, >= 101)")
                ->capture_default_str();
            cmd->add_option("--seed", options.seed, "master seed")->capture_default_str();
        }
    };

    // series
    auto* series_cmd = app.add_subcommand("series", "the extended series table with checks");
    add_common(series_cmd, false);
    series_cmd->callback([&]() {
        const auto entries = run_series_suite();
        std::exit(emit_entries(entries, options, json, timings));
    });

    // chern
    std::string bundle_text, ring_text;
    int degree = 0;
    auto* chern_cmd = app.add_subcommand("chern", "Chern class of a bundle expression");
    chern_cmd->add_option("bundle", bundle_text, "e.g. wedge(2,dual(taut(0)))")->required();
    chern_cmd->add_option("--ring", ring_text, "e.g. G(5,9) or G(2,4)^3")->required();
    chern_cmd->add_option("--degree", degree, "cohomological degree")->required();
    add_common(chern_cmd, false);
    chern_cmd->callback([&]() {
        const GrassmannProduct ring = parse_ring(ring_text);
        const SchubertClass c = chern_class_on(ring, parse_bundle(bundle_text), degree);
        if (json)
            std::cout << class_to_json(c).dump(2) << "\n";
        else
            std::cout << format_class(c) << "\n";
        std::exit(0);
    });

    // integrate
    std::string class_text;
    auto* integrate_cmd = app.add_subcommand("integrate", "integrate a class expression");
    integrate_cmd->add_option("class", class_text,
                              "e.g. \"c(10,wedge(2,dual(taut(0)))) * c(10,wedge(3,dual(taut(0))))\"")
        ->required();
    integrate_cmd->add_option("--ring", ring_text, "ambient ring")->required();
    add_common(integrate_cmd, false);
    integrate_cmd->callback([&]() {
        const GrassmannProduct ring = parse_ring(ring_text);
        const Int value = integrate(parse_class(class_text, ring));
        if (json)
            std::cout << nlohmann::ordered_json{{"value", value.str()}}.dump() << "\n";
        else
            std::cout << value.str() << "\n";
        std::exit(0);
    });

    // degree
    std::vector<long> weights;
    auto* degree_cmd = app.add_subcommand("degree", "degree of a class for a polarization");
    degree_cmd->add_option("class", class_text, "class expression")->required();
    degree_cmd->add_option("--ring", ring_text, "ambient ring")->required();
    degree_cmd->add_option("--weights", weights, "one weight per factor")->required();
    add_common(degree_cmd, false);
    degree_cmd->callback([&]() {
        const GrassmannProduct ring = parse_ring(ring_text);
        const Int value = degree_wrt(parse_class(class_text, ring), weights);
        if (json)
            std::cout << nlohmann::ordered_json{{"value", value.str()}}.dump() << "\n";
        else
            std::cout << value.str() << "\n";
        std::exit(0);
    });

    // fixed suites
    auto* lemma2_cmd = app.add_subcommand("lemma2", "the count of common zero 5-spaces");
    add_common(lemma2_cmd, false);
    lemma2_cmd->callback(
        [&]() { std::exit(emit_entries(run_lemma2(), options, json, timings)); });

    auto* d4_cmd = app.add_subcommand("d4-degrees", "triple-product degrees and class identities");
    add_common(d4_cmd, false);
    d4_cmd->callback(
        [&]() { std::exit(emit_entries(run_d4_degrees(), options, json, timings)); });

    // Exploratory sampling subcommands default to 100 samples; reproduce-all
    // runs the larger committed sizes.
    int samples = 100;

    auto* orbits_cmd = app.add_subcommand("orbits", "restriction ranks of random 6-spaces");
    add_common(orbits_cmd, true);
    orbits_cmd->add_option("--samples", samples, "sample count")->capture_default_str();
    orbits_cmd->callback([&]() {
        options.orbit_samples = samples;
        std::exit(emit_entries(run_orbit_suite(options), options, json, timings));
    });

    auto* kernels_cmd = app.add_subcommand("kernels", "contraction kernel dimensions");
    add_common(kernels_cmd, true);
    kernels_cmd->add_option("--samples", samples, "sample count")->capture_default_str();
    kernels_cmd->callback([&]() {
        options.kernel_samples = samples;
        options.flambda_samples = samples;
        auto entries = run_kernel_suite(options);
        auto flambda = run_flambda_suite(options);
        entries.insert(entries.end(), flambda.begin(), flambda.end());
        std::exit(emit_entries(entries, options, json, timings));
    });

    auto* graph_cmd = app.add_subcommand("graph-identity", "graph-subspace membership identity");
    add_common(graph_cmd, true);
    graph_cmd->add_option("--samples", samples, "sample count")->capture_default_str();
    graph_cmd->callback([&]() {
        options.graph_samples = samples;
        std::exit(emit_entries(run_graph_suite(options), options, json, timings));
    });

    auto* cayley_cmd = app.add_subcommand("cayley", "determinantal quartic correspondences");
    add_common(cayley_cmd, true);
    cayley_cmd->add_option("--samples", samples, "surface point count")->capture_default_str();
    cayley_cmd->callback([&]() {
        options.cayley_points = samples;
        std::exit(emit_entries(run_cayley_suite(options), options, json, timings));
    });

    // reproduce-all
    auto* all_cmd = app.add_subcommand("reproduce-all", "every check, deterministic");
    add_common(all_cmd, true);
    all_cmd->add_flag("--timings", timings, "include runtimes in JSON output");
    all_cmd->add_flag("!--no-stretch", options.include_stretch,
                      "skip the non-gating Euler-number checks");
    all_cmd->callback([&]() {
        const auto entries = run_all(options);
        std::exit(emit_entries(entries, options, json, timings));
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
