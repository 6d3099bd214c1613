#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace imc {

struct DiffTestConfig {
    std::uint64_t seed = 1;
    std::uint64_t cases = 100;
    std::size_t max_nodes = 5;         // per slice / per model scale knob
    std::size_t max_slices = 6;        // largest slice count (even, >= 2)
    std::size_t max_formula_size = 30;
    // Subset of {"k0","kc-impl","fpl1","bpl0","s42-1","kc2"}; empty = all.
    std::vector<std::string> generators;
};

struct SuiteStats {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
};

struct DiffTestReport {
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::vector<std::string> generators;            // resolved, sorted
    std::map<std::string, SuiteStats> suites;       // sorted by suite name
    std::uint64_t sink_divergences = 0;             // literal vs adopted apath reading
    std::optional<std::string> first_failure;       // "suite name, case N"
    std::optional<std::string> failure_bundle;      // self-contained reproduction
    bool ok() const;
};

// Runs the master soundness suite (every enabled reduction plus
// chain-to-modal against brute-force apath), the translation-preservation
// suite, the fast-vs-naive suites, and the two-variable pipeline suite, over
// deterministically seeded inputs. Failures are report content, not errors.
// InputError on invalid configuration (cases = 0, odd/undersized slice bound,
// unknown generator name).
DiffTestReport run_difftest(const DiffTestConfig& config);

// Plain-text rendering; byte-identical for identical reports.
std::string render_text(const DiffTestReport& report);

// Line-delimited machine-readable rendering (one JSON object per suite plus a
// summary line).
std::string render_jsonl(const DiffTestReport& report);

} // namespace imc
