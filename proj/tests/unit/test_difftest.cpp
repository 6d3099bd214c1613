#include <doctest.h>
#include <json.hpp>

#include <imc/difftest.hpp>
#include <imc/errors.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace imc;

namespace {

DiffTestConfig small_config() {
    DiffTestConfig cfg;
    cfg.seed = 7;
    cfg.cases = 6;
    cfg.max_nodes = 3;
    cfg.max_slices = 4;
    cfg.max_formula_size = 12;
    return cfg;
}

std::set<std::string> suite_names(const DiffTestReport& report) {
    std::set<std::string> names;
    for (const auto& [suite, stats] : report.suites) names.insert(suite);
    return names;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_SUITE("difftest") {

TEST_CASE("configuration is validated before any work") {
    DiffTestConfig cfg = small_config();

    cfg.cases = 0;
    CHECK_THROWS_WITH_AS(run_difftest(cfg), "difftest needs at least one case",
                         InputError);

    cfg = small_config();
    cfg.max_slices = 3;
    CHECK_THROWS_WITH_AS(run_difftest(cfg), "slice bound must be even and at least 2",
                         InputError);
    cfg.max_slices = 0;
    CHECK_THROWS_WITH_AS(run_difftest(cfg), "slice bound must be even and at least 2",
                         InputError);

    cfg = small_config();
    cfg.max_nodes = 0;
    CHECK_THROWS_WITH_AS(run_difftest(cfg), "node bound must be positive", InputError);

    cfg = small_config();
    cfg.max_formula_size = 0;
    CHECK_THROWS_WITH_AS(run_difftest(cfg), "formula size bound must be positive",
                         InputError);

    cfg = small_config();
    cfg.generators = {"k0", "frobnicate"};
    CHECK_THROWS_WITH_AS(run_difftest(cfg), "unknown generator: 'frobnicate'",
                         InputError);
}

TEST_CASE("a small full run exercises every suite and passes") {
    const DiffTestConfig cfg = small_config();
    const DiffTestReport report = run_difftest(cfg);
    CAPTURE(render_text(report));

    CHECK(report.seed == 7);
    CHECK(report.cases == 6);
    CHECK(report.generators ==
          std::vector<std::string>{"bpl0", "fpl1", "k0", "kc-impl", "kc2", "s42-1"});

    const std::set<std::string> expected = {
        "chain:bpl0",     "chain:fpl1",     "chain:kc-impl", "fast:fpl0",
        "fast:prl0",      "pipeline:kc2",   "reduction:bpl0", "reduction:fpl1",
        "reduction:k0",   "reduction:kc-impl", "reduction:s42-1", "translate:gtp"};
    CHECK(suite_names(report) == expected);

    for (const auto& [suite, stats] : report.suites) {
        CAPTURE(suite);
        CHECK(stats.pass == cfg.cases);
        CHECK(stats.fail == 0);
    }
    // One of the six graphs is decided differently under the literal
    // universal-sink reading; the counter flags it without failing anything.
    CHECK(report.sink_divergences == 1);
    CHECK(report.ok());
    CHECK_FALSE(report.first_failure.has_value());
    CHECK_FALSE(report.failure_bundle.has_value());
}

TEST_CASE("reports are deterministic for a fixed configuration") {
    const DiffTestConfig cfg = small_config();
    const DiffTestReport first = run_difftest(cfg);
    const DiffTestReport second = run_difftest(cfg);
    CHECK(render_text(first) == render_text(second));
    CHECK(render_jsonl(first) == render_jsonl(second));

    DiffTestConfig other = cfg;
    other.seed = 8;
    // The header alone distinguishes runs with different seeds.
    CHECK(render_text(run_difftest(other)) != render_text(first));
}

TEST_CASE("generator subsetting prunes exactly the dependent suites") {
    DiffTestConfig cfg = small_config();
    cfg.cases = 3;

    // k0 has no intuitionistic output, so no companion-chain suite appears;
    // the translation and fast-checker suites run regardless of the subset.
    cfg.generators = {"k0"};
    DiffTestReport report = run_difftest(cfg);
    CHECK(report.generators == std::vector<std::string>{"k0"});
    CHECK(suite_names(report) == std::set<std::string>{"fast:fpl0", "fast:prl0",
                                                       "reduction:k0",
                                                       "translate:gtp"});
    CHECK(report.ok());

    cfg.generators = {"kc2"};
    report = run_difftest(cfg);
    CHECK(suite_names(report) == std::set<std::string>{"fast:fpl0", "fast:prl0",
                                                       "pipeline:kc2",
                                                       "translate:gtp"});
    CHECK(report.ok());

    // Order in the config does not matter; the resolved list is sorted.
    cfg.generators = {"kc-impl", "fpl1"};
    report = run_difftest(cfg);
    CHECK(report.generators == std::vector<std::string>{"fpl1", "kc-impl"});
    CHECK(suite_names(report) ==
          std::set<std::string>{"chain:fpl1", "chain:kc-impl", "fast:fpl0",
                                "fast:prl0", "reduction:fpl1", "reduction:kc-impl",
                                "translate:gtp"});
    CHECK(report.ok());
}

TEST_CASE("text rendering is byte-exact for a passing run") {
    const DiffTestReport report = run_difftest(small_config());
    const std::string expected =
        "seed: 7\n"
        "cases: 6\n"
        "generators: bpl0 fpl1 k0 kc-impl kc2 s42-1\n"
        "suite chain:bpl0: pass 6 fail 0\n"
        "suite chain:fpl1: pass 6 fail 0\n"
        "suite chain:kc-impl: pass 6 fail 0\n"
        "suite fast:fpl0: pass 6 fail 0\n"
        "suite fast:prl0: pass 6 fail 0\n"
        "suite pipeline:kc2: pass 6 fail 0\n"
        "suite reduction:bpl0: pass 6 fail 0\n"
        "suite reduction:fpl1: pass 6 fail 0\n"
        "suite reduction:k0: pass 6 fail 0\n"
        "suite reduction:kc-impl: pass 6 fail 0\n"
        "suite reduction:s42-1: pass 6 fail 0\n"
        "suite translate:gtp: pass 6 fail 0\n"
        "sink divergences: 1\n"
        "first failure: none\n"
        "result: ok\n";
    CHECK(render_text(report) == expected);
}

TEST_CASE("jsonl rendering emits one parseable object per suite plus a summary") {
    const DiffTestReport report = run_difftest(small_config());
    const std::vector<std::string> lines = split_lines(render_jsonl(report));
    REQUIRE(lines.size() == report.suites.size() + 1);

    std::set<std::string> seen;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const nlohmann::json obj = nlohmann::json::parse(lines[i]);
        REQUIRE(obj.contains("suite"));
        seen.insert(obj["suite"].get<std::string>());
        CHECK(obj["pass"].get<std::uint64_t>() == 6);
        CHECK(obj["fail"].get<std::uint64_t>() == 0);
    }
    CHECK(seen == suite_names(report));

    const nlohmann::json summary = nlohmann::json::parse(lines.back());
    CHECK(summary["summary"].get<bool>());
    CHECK(summary["seed"].get<std::uint64_t>() == 7);
    CHECK(summary["cases"].get<std::uint64_t>() == 6);
    CHECK(summary["generators"].size() == 6);
    CHECK(summary["sink_divergences"].get<std::uint64_t>() == 1);
    CHECK(summary["ok"].get<bool>());
    CHECK(summary["first_failure"].is_null());
    CHECK(summary["failure_bundle"].is_null());
}

} // TEST_SUITE("difftest")
