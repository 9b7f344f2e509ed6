// harness.hpp: experiment manifests, lemma verification, sweeps, persistence.
//
// A manifest fully determines every produced number: generator specs, sizes,
// seed, target area, k policy. Emitted files are deterministic byte for byte
// (rationals as "p/q", doubles with 17 significant digits, fixed column
// order, no timing fields); wall-clock timings go to stderr or interactive
// stdout only.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trigrid/bounds.hpp"
#include "trigrid/energy.hpp"
#include "trigrid/generators.hpp"
#include "trigrid/grid.hpp"
#include "trigrid/report.hpp"

namespace trigrid {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(const std::string& text);  // "csv" | "json"

struct KPolicy {
    enum class Mode { Explicit, Formula, Search };
    Mode mode = Mode::Formula;
    std::int64_t value = 1;  // used by Explicit

    static KPolicy parse(const std::string& text);  // "<int>" | "formula" | "search"
    std::string to_string() const;
};

struct ExperimentManifest {
    std::string id = "experiment";
    std::uint64_t seed = 1;
    GeneratorSpec gen_a;
    GeneratorSpec gen_b;
    std::string set_a_file;  // when nonempty, load A from file instead
    std::string set_b_file;
    std::size_t size_a = 8;
    std::size_t size_b = 8;
    Scalar target_area = 1;
    KPolicy k_policy;
    std::vector<std::size_t> sweep_sizes;
    std::string output_dir = "out";
    int jobs = 1;
    bool guard_override = false;

    CountOptions count_options() const {
        CountOptions opts;
        opts.jobs = jobs;
        opts.override_guard = guard_override;
        return opts;
    }

    static ExperimentManifest load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    GroundSet make_a() const;  // file when set, generator otherwise
    GroundSet make_b() const;
};

enum class LemmaId {
    SchoenShkredov,  // delta-rich difference counts for convex X
    E3,              // E_3(A) against d(A) |A|^3 log |A|
    RichTuple,       // the exact d = |A| inequality
    KRich,           // k-rich points of A^3
    KProj,           // xy-projection of the k-rich points
    RichRich,        // triangle class counts vs the Lemma bounds
    PoorRich,
    PoorPoor,
};

LemmaId parse_lemma(const std::string& name);
std::string lemma_name(LemmaId id);
std::vector<std::string> lemma_names();

struct RatioReport {
    std::string lemma;
    std::vector<RatioRow> rows;
};

// Computes the exact LHS quantities of the named lemma on the manifest's
// sets and evaluates the displayed bound expressions with constant 1.
// Rows are ASSERTED-EXACT only where the inequality is a constant-free
// theorem (the rich-tuple bound with d = |A|, the trivial counting bounds);
// every O(.) bound is REPORT-ONLY.
RatioReport verify_lemma(LemmaId id, const ExperimentManifest& manifest);

// The default calibration family for d(X): {X, 2X, random convex of equal
// size, uniform random of equal size}; taus 1..|X| are supplied by callers.
std::vector<GroundSet> default_calibration_family(const GroundSet& x, std::uint64_t seed);

// Calibrates d(X) over the default family with taus 1..|X|.
DParam calibrate_default(const GroundSet& x, std::uint64_t seed);

struct SweepRow {
    std::size_t m = 0;
    std::uint64_t n = 0;       // m^2
    std::int64_t count = 0;    // exact unit-area triangle count
    double bound = 0;          // theorem_bound(n, 1, 1)
    double ratio = 0;
    double elapsed_ms = 0;     // reported to stderr/stdout, never to files
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<double> slope;  // ln(count) vs ln(n) OLS, >= 2 positive rows
};

// For each m in manifest.sweep_sizes: generate A and B of size m, count
// unit-area triangles with the incidence counter (brute-force cross-check
// for m <= 8), and record count / theorem_bound(n, 1, 1).
SweepResult run_sweep(const ExperimentManifest& manifest);

// OLS slope of ln(count) against ln(n) over rows with count > 0; throws
// DomainError with fewer than 2 usable rows.
double fit_exponent(const std::vector<std::pair<double, double>>& n_count_rows);

// --- persistence -----------------------------------------------------------

std::string to_csv(const RatioReport& report);
std::string to_csv(const SweepResult& result);
std::string to_csv(const DecompositionCounts& counts);
std::string to_json_string(const RatioReport& report);
std::string to_json_string(const SweepResult& result);
std::string to_json_string(const DecompositionCounts& counts);

// 17-significant-digit shortest-fixed formatting used everywhere a double is
// serialized; rationals always serialize as "p/q".
std::string format_double(double value);

void emit(const RatioReport& report, OutputFormat format, const std::filesystem::path& path);
void emit(const SweepResult& result, OutputFormat format, const std::filesystem::path& path);
void emit(const DecompositionCounts& counts, OutputFormat format,
          const std::filesystem::path& path);

}  // namespace trigrid
