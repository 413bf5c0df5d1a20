#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "chowlab/report.hpp"

using namespace chowlab;

TEST_CASE("the fixed suites pass") {
    CHECK(all_pass(run_lemma2()));
    CHECK(all_pass(run_d4_degrees()));
    CHECK(all_pass(run_euler_stretch()));
}

TEST_CASE("series suite surfaces the recorded exception without failing") {
    const auto entries = run_series_suite();
    CHECK(all_pass(entries));
    int recorded = 0;
    for (const auto& e : entries)
        if (e.status == EntryStatus::RecordedException) {
            ++recorded;
            CHECK(e.id == "series.E7.index_x");
        }
    CHECK(recorded == 1);
}

TEST_CASE("sampled suites pass at reduced sizes") {
    ReportOptions options;
    options.orbit_samples = 50;
    options.kernel_samples = 20;
    options.flambda_samples = 20;
    options.graph_samples = 25;
    options.cayley_points = 10;
    CHECK(all_pass(run_orbit_suite(options)));
    CHECK(all_pass(run_kernel_suite(options)));
    CHECK(all_pass(run_flambda_suite(options)));
    CHECK(all_pass(run_graph_suite(options)));
    CHECK(all_pass(run_cayley_suite(options)));
    CHECK(all_pass(run_duality_suite()));
    CHECK(all_pass(run_lr_oracle(6)));
}

TEST_CASE("suites pass away from the default prime and seed") {
    ReportOptions options;
    options.prime = 1013;
    options.seed = 7;
    options.orbit_samples = 25;
    options.graph_samples = 10;
    options.cayley_points = 6;
    CHECK(all_pass(run_orbit_suite(options)));
    CHECK(all_pass(run_graph_suite(options)));
    CHECK(all_pass(run_cayley_suite(options)));
}

TEST_CASE("run_all validates its prime") {
    ReportOptions options;
    options.prime = 97;  // below the documented minimum
    CHECK_THROWS_AS(run_all(options), std::invalid_argument);
    options.prime = 1000;  // not prime
    CHECK_THROWS_AS(run_all(options), std::invalid_argument);
}

TEST_CASE("JSON emission is byte-deterministic and structurally sound") {
    ReportOptions options;
    const auto entries1 = run_lemma2();
    const auto entries2 = run_lemma2();
    const std::string json1 = emit_json(entries1, options);
    const std::string json2 = emit_json(entries2, options);
    CHECK(json1 == json2);  // runtimes are excluded by default

    const auto parsed = nlohmann::json::parse(json1);
    CHECK(parsed.at("prime") == 1009);
    CHECK(parsed.at("seed") == 0);
    CHECK(parsed.at("entries").is_array());
    CHECK(parsed.at("entries").size() == entries1.size());
    for (const auto& item : parsed.at("entries")) {
        CHECK(item.contains("id"));
        CHECK(item.contains("claim"));
        CHECK(item.contains("expected"));
        CHECK(item.contains("computed"));
        CHECK(item.contains("status"));
        CHECK_FALSE(item.contains("runtime_ms"));
    }
    CHECK(parsed.at("summary").at("fail") == 0);

    const std::string timed = emit_json(entries1, options, true);
    const auto parsed_timed = nlohmann::json::parse(timed);
    CHECK(parsed_timed.at("entries").at(0).contains("runtime_ms"));
}

TEST_CASE("empty reports are valid") {
    ReportOptions options;
    const std::vector<ReportEntry> none;
    CHECK(all_pass(none));
    const auto parsed = nlohmann::json::parse(emit_json(none, options));
    CHECK(parsed.at("entries").empty());
    CHECK(parsed.at("summary").at("pass") == 0);
    CHECK(emit_text(none) == "0 pass, 0 fail, 0 recorded exceptions\n");
}
