#pragma once
// Named verification suites: each runs a list of checks over the toolkit's
// modules and returns a structured report for text and JSON rendering.

#include "k3z3/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace k3z3::suites {

inline constexpr const char* kSchema = "k3z3-report/1";
inline constexpr const char* kVersion = "1.0.0";

struct Check {
    std::string id;       // unique check identifier, e.g. "lattices.disc_P"
    std::string anchor;   // the asserted fact, human-readable
    std::string status;   // "pass", "fail" or "skipped"
    std::string detail;   // printed value line (e.g. a coefficient list)
    std::string witness;  // failure witness, empty on pass
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;  // wall time; excluded from JSON for determinism
    bool pass() const;
};

struct Options {
    int order = 4;             // genus truncation order
    bool extended = false;     // enables the long M24 order computation
    std::uint64_t seed = 1;    // randomized property sampling
};

// {"lattices", "gluing", "symmetries", "codes", "niemeier", "mathieu", "genus"}
const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument on an unknown name
// ("all" is expanded by run_all).
SuiteReport run_suite(const std::string& name, const Options& opt);
std::vector<SuiteReport> run_all(const Options& opt);

std::string format_text(const SuiteReport& r);
// Deterministic JSON document (no timestamps) for a list of suite reports.
std::string reports_to_json(const std::vector<SuiteReport>& rs, const Options& opt);

// ---- lattice serialization ---------------------------------------------
// {"rank": n, "gram": [[...]], "basis"?: [[...]], "ambient_signature"?: [p, n]}
// with every rational rendered as an "a/b" (or "a") string.
std::string lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const std::string& text);

}  // namespace k3z3::suites
