// trigrid CLI: exact unit-area triangle counting over product grids, with
// lemma-verification reports, calibration, bound evaluation, and sweeps.
//
// Exit codes: 0 success, 2 usage/configuration error, 3 theorem violation
// (an exact inequality failed, i.e. a bug), 4 resource guard refused a run.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trigrid/bounds.hpp"
#include "trigrid/energy.hpp"
#include "trigrid/generators.hpp"
#include "trigrid/grid.hpp"
#include "trigrid/harness.hpp"

namespace {

using namespace trigrid;
using ordered_json = nlohmann::ordered_json;

struct GlobalArgs {
    std::uint64_t seed = 1;
    std::string area = "1";
    std::string k_policy = "formula";
    std::string format = "csv";
    int jobs = 1;
    bool jobs_given = false;
    bool guard_override = false;
    std::string out;
};

struct SetArgs {
    std::string gen = "squares";
    std::size_t m = 8;
    std::string file;  // overrides the generator when set
};

GroundSet resolve_set(const SetArgs& args, std::uint64_t seed) {
    if (!args.file.empty()) return load_ground_set(args.file);
    return gen_set(GeneratorSpec::parse(args.gen), args.m, seed);
}

CountOptions make_count_options(const GlobalArgs& g) {
    CountOptions opts;
    opts.jobs = g.jobs;
    opts.override_guard = g.guard_override;
    return opts;
}

void write_both_formats(const std::string& csv, const std::string& json,
                        const std::filesystem::path& base) {
    if (base.has_parent_path()) std::filesystem::create_directories(base.parent_path());
    {
        std::ofstream out(base.string() + ".csv", std::ios::binary);
        out << csv;
    }
    {
        std::ofstream out(base.string() + ".json", std::ios::binary);
        out << json;
    }
}

void add_set_options(CLI::App* cmd, SetArgs& a, SetArgs& b) {
    cmd->add_option("--gen-a", a.gen, "generator spec for A (e.g. squares, geometric:2)");
    cmd->add_option("--ma", a.m, "size of A");
    cmd->add_option("--set-a", a.file, "load A from file instead of generating");
    cmd->add_option("--gen-b", b.gen, "generator spec for B");
    cmd->add_option("--mb", b.m, "size of B");
    cmd->add_option("--set-b", b.file, "load B from file instead of generating");
}

int cmd_gen_set(const GlobalArgs& g, const SetArgs& a) {
    const GroundSet set = resolve_set(a, g.seed);
    if (g.out.empty()) {
        for (const Scalar& v : set) std::cout << format_scalar(v) << '\n';
    } else {
        save_ground_set(set, g.out);
        std::cerr << "wrote " << set.size() << " elements to " << g.out << '\n';
    }
    return 0;
}

ordered_json count_row(const Grid& grid, const char* method, std::int64_t count, double ms) {
    ordered_json row;
    row["nA"] = grid.a.size();
    row["nB"] = grid.b.size();
    row["n"] = grid.n();
    row["s"] = format_scalar(grid.target_area);
    row["count"] = count;
    row["method"] = method;
    row["elapsed_ms"] = ms;
    return row;
}

int cmd_count(const GlobalArgs& g, const SetArgs& sa, const SetArgs& sb, const std::string& method) {
    const Grid grid(resolve_set(sa, g.seed), resolve_set(sb, g.seed + 1), parse_scalar(g.area));
    const CountOptions opts = make_count_options(g);
    ordered_json rows = ordered_json::array();
    std::optional<std::int64_t> incidence, brute;
    if (method == "incidence" || method == "both") {
        const auto t0 = std::chrono::steady_clock::now();
        incidence = count_unit_triangles_incidence(grid, opts);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(count_row(grid, "incidence", *incidence, ms));
    }
    if (method == "bruteforce" || method == "both") {
        const auto t0 = std::chrono::steady_clock::now();
        brute = count_unit_triangles_bruteforce(grid, opts);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(count_row(grid, "bruteforce", *brute, ms));
    }
    if (incidence && brute && *incidence != *brute)
        throw TheoremViolation("incidence and brute-force counts disagree");
    for (const auto& row : rows) std::cout << row.dump() << '\n';
    if (!g.out.empty()) {
        // Files are deterministic: timing fields never reach disk.
        std::string csv = "nA,nB,n,s,count,method\n";
        ordered_json jrows = ordered_json::array();
        for (auto row : rows) {
            row.erase("elapsed_ms");
            csv += std::to_string(static_cast<std::size_t>(row["nA"])) + "," +
                   std::to_string(static_cast<std::size_t>(row["nB"])) + "," +
                   std::to_string(static_cast<std::size_t>(row["n"])) + "," +
                   std::string(row["s"]) + "," +
                   std::to_string(static_cast<std::int64_t>(row["count"])) + "," +
                   std::string(row["method"]) + "\n";
            jrows.push_back(row);
        }
        write_both_formats(csv, jrows.dump(2) + "\n", g.out);
    }
    return 0;
}

int cmd_decompose(const GlobalArgs& g, const SetArgs& sa, const SetArgs& sb) {
    const Grid grid(resolve_set(sa, g.seed), resolve_set(sb, g.seed + 1), parse_scalar(g.area));
    const KPolicy policy = KPolicy::parse(g.k_policy);
    std::int64_t k = 1;
    if (policy.mode == KPolicy::Mode::Explicit) {
        k = policy.value;
    } else if (grid.n() >= 2) {
        // the k formula takes the calibrated SzT parameters of the two sides
        BoundInput in{grid.n(), calibrate_default(grid.a, g.seed).value,
                      calibrate_default(grid.b, g.seed + 1).value, false};
        const OptimalK opt = optimal_k(in);
        k = policy.mode == KPolicy::Mode::Formula ? opt.k_formula : opt.k_search;
    }
    const DecompositionCounts counts = classify_triangles(grid, k, make_count_options(g));
    std::cout << to_json_string(counts);
    if (!g.out.empty()) write_both_formats(to_csv(counts), to_json_string(counts), g.out);
    return 0;
}

int cmd_energy(const GlobalArgs& g, const SetArgs& sa, int k, int l, bool tuple_form,
               std::int64_t rich_m, std::int64_t rich_tau) {
    const GroundSet a = resolve_set(sa, g.seed);
    ordered_json j;
    j["set_size"] = a.size();
    if (rich_m > 0) {
        j["rich_tuple_count"] = rich_tuple_count(a, static_cast<int>(rich_m), rich_tau);
        j["m"] = rich_m;
        j["tau"] = rich_tau;
    } else if (l > 0) {
        const EnergyValue e = energy_kl(a, k, l);
        j["E"] = e.value.str();
        j["k"] = k;
        j["l"] = l;
    } else {
        const EnergyValue e = tuple_form ? energy_k_tuple(a, k) : energy_k(a, k);
        j["E"] = e.value.str();
        j["k"] = k;
        j["form"] = tuple_form ? "tuple" : "profile";
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_calibrate(const GlobalArgs& g, const SetArgs& sa) {
    const GroundSet x = resolve_set(sa, g.seed);
    const DParam d = calibrate_default(x, g.seed);
    ordered_json j;
    j["set_size"] = x.size();
    j["d"] = format_scalar(d.value);
    j["d_value"] = to_double(d.value);
    j["alpha"] = d.alpha;
    j["rng"] = kRngAlgorithm;
    j["seed"] = g.seed;
    j["witnesses"] = ordered_json::array();
    for (const DParamWitness& w : d.witnesses) {
        ordered_json wj;
        wj["family_index"] = w.family_index;
        wj["tau"] = w.tau;
        wj["count"] = w.count;
        j["witnesses"].push_back(std::move(wj));
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

ExperimentManifest build_manifest(const GlobalArgs& g, const SetArgs& sa, const SetArgs& sb,
                                  const std::vector<std::size_t>& sweep_sizes) {
    ExperimentManifest m;
    m.id = "cli";
    m.seed = g.seed;
    m.gen_a = GeneratorSpec::parse(sa.gen);
    m.gen_b = GeneratorSpec::parse(sb.gen);
    m.set_a_file = sa.file;
    m.set_b_file = sb.file;
    m.size_a = sa.m;
    m.size_b = sb.m;
    m.target_area = parse_scalar(g.area);
    m.k_policy = KPolicy::parse(g.k_policy);
    m.sweep_sizes = sweep_sizes;
    m.jobs = g.jobs;
    m.guard_override = g.guard_override;
    if (!g.out.empty()) m.output_dir = g.out;
    return m;
}

int cmd_verify(const GlobalArgs& g, const SetArgs& sa, const SetArgs& sb, const std::string& lemma,
               const std::string& manifest_path) {
    ExperimentManifest manifest;
    if (!manifest_path.empty()) {
        manifest = ExperimentManifest::load(manifest_path);
        if (g.jobs_given) manifest.jobs = g.jobs;  // parallelism never changes results
    } else {
        manifest = build_manifest(g, sa, sb, {});
    }
    const RatioReport report = verify_lemma(parse_lemma(lemma), manifest);
    const OutputFormat fmt = parse_format(g.format);
    std::cout << (fmt == OutputFormat::Csv ? to_csv(report) : to_json_string(report));
    if (!g.out.empty())
        write_both_formats(to_csv(report), to_json_string(report),
                           std::filesystem::path(g.out) / report.lemma);
    std::size_t asserted = 0;
    for (const RatioRow& row : report.rows)
        if (row.verdict == Verdict::AssertedExact) ++asserted;
    std::cerr << report.lemma << ": " << report.rows.size() << " rows, " << asserted
              << " asserted-exact rows hold\n";
    return 0;
}

int cmd_sweep(const GlobalArgs& g, const SetArgs& sa, const SetArgs& sb,
              const std::string& sizes_text, const std::string& manifest_path,
              const std::string& save_manifest) {
    ExperimentManifest manifest;
    if (!manifest_path.empty()) {
        manifest = ExperimentManifest::load(manifest_path);
        if (g.jobs_given) manifest.jobs = g.jobs;
    } else {
        std::vector<std::size_t> sizes;
        for (const auto& part : CLI::detail::split(sizes_text, ','))
            sizes.push_back(static_cast<std::size_t>(std::stoull(part)));
        manifest = build_manifest(g, sa, sb, sizes);
    }
    if (!save_manifest.empty()) manifest.save(save_manifest);
    const SweepResult result = run_sweep(manifest);
    for (const SweepRow& row : result.rows)
        std::cerr << "m=" << row.m << " n=" << row.n << " count=" << row.count
                  << " ratio=" << format_double(row.ratio) << " (" << format_double(row.elapsed_ms)
                  << " ms)\n";
    if (result.slope)
        std::cerr << "fitted slope: " << format_double(*result.slope) << "\n";
    else
        std::cerr << "fitted slope: undefined (fewer than 2 positive counts)\n";
    const std::filesystem::path base = std::filesystem::path(manifest.output_dir) / "sweep";
    write_both_formats(to_csv(result), to_json_string(result), base);
    std::cout << to_json_string(result);
    return 0;
}

int cmd_bounds(const GlobalArgs& g, std::uint64_t n, const std::string& da, const std::string& db,
               bool log_suppressed) {
    BoundInput in{n, parse_scalar(da), parse_scalar(db), log_suppressed};
    const OptimalK opt = optimal_k(in);
    const KPolicy policy = KPolicy::parse(g.k_policy);
    std::int64_t k = policy.mode == KPolicy::Mode::Explicit ? policy.value
                     : policy.mode == KPolicy::Mode::Formula ? opt.k_formula
                                                             : opt.k_search;
    const FiveTermBound terms = five_term_bound(in, k);
    ordered_json j;
    j["n"] = n;
    j["dA"] = da;
    j["dB"] = db;
    j["log_suppressed"] = log_suppressed;
    j["k"] = k;
    j["k_formula"] = opt.k_formula;
    j["k_search"] = opt.k_search;
    j["terms"] = {terms.t1, terms.t2, terms.t3, terms.t4, terms.t5};
    j["total"] = terms.total();
    j["theorem_bound"] = theorem_bound(in);
    j["hypothesis_holds"] = hypothesis_check(in);
    ordered_json refs = ordered_json::array();
    for (const auto& [name, exponent] : reference_exponents()) {
        ordered_json r;
        r["name"] = name;
        r["exponent"] = format_scalar(exponent);
        r["value"] = to_double(exponent);
        refs.push_back(std::move(r));
    }
    j["reference_exponents"] = std::move(refs);
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact unit-area triangle counting workbench for product grids"};
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--seed", g.seed, "experiment seed")->capture_default_str();
    app.add_option("--area", g.area, "target area as p/q")->capture_default_str();
    app.add_option("--k", g.k_policy, "richness threshold: integer, 'formula', or 'search'")
        ->capture_default_str();
    app.add_option("--format", g.format, "stdout format: csv or json")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str();
    app.add_flag("--guard-override", g.guard_override, "bypass resource guards");
    app.add_option("--out", g.out, "output file or directory base");

    SetArgs sa, sb;

    auto* gen = app.add_subcommand("gen-set", "generate a ground set");
    gen->add_option("--kind", sa.gen, "generator spec")->capture_default_str();
    gen->add_option("-m,--size", sa.m, "set size")->capture_default_str();

    std::string method = "incidence";
    auto* count = app.add_subcommand("count", "count unit-area triangles in A x B");
    add_set_options(count, sa, sb);
    count->add_option("--method", method, "incidence | bruteforce | both")->capture_default_str();

    auto* decompose = app.add_subcommand("decompose", "rich/poor triangle class counts");
    add_set_options(decompose, sa, sb);

    int ek = 2, el = 0;
    bool tuple_form = false;
    std::int64_t rich_m = 0, rich_tau = 1;
    auto* energy = app.add_subcommand("energy", "additive energies E_k, E_{k,l}");
    energy->add_option("--gen-a", sa.gen, "generator spec for A");
    energy->add_option("--ma", sa.m, "size of A");
    energy->add_option("--set-a", sa.file, "load A from file");
    energy->add_option("--order", ek, "energy order k")->capture_default_str();
    energy->add_option("--l", el, "second order l (computes E_{k,l})");
    energy->add_flag("--tuple", tuple_form, "use the tuple-sum definition of E_k");
    energy->add_option("--rich-m", rich_m, "rich-tuple count: tuple length m");
    energy->add_option("--rich-tau", rich_tau, "rich-tuple count: threshold tau");

    auto* calibrate = app.add_subcommand("calibrate-d", "calibrate the SzT parameter d(X)");
    calibrate->add_option("--gen-a", sa.gen, "generator spec for X");
    calibrate->add_option("--ma", sa.m, "size of X");
    calibrate->add_option("--set-a", sa.file, "load X from file");

    std::string lemma, manifest_path, save_manifest;
    auto* verify = app.add_subcommand("verify", "verify a lemma's counts against its bound");
    verify->add_option("lemma", lemma, "one of: schoen-shkredov e3 rich-tuple krich kproj rich-rich poor-rich poor-poor")
        ->required();
    add_set_options(verify, sa, sb);
    verify->add_option("--manifest", manifest_path, "load an experiment manifest (JSON)");

    std::string sizes = "8,16,24,32,48,64";
    auto* sweep = app.add_subcommand("sweep", "exponent sweep over grid sizes");
    sweep->add_option("--sizes", sizes, "comma-separated sizes m")->capture_default_str();
    sweep->add_option("--gen-a", sa.gen, "generator spec (A = B)")->capture_default_str();
    sweep->add_option("--gen-b", sb.gen, "generator spec for B (defaults to A's)");
    sweep->add_option("--manifest", manifest_path, "load an experiment manifest (JSON)");
    sweep->add_option("--save-manifest", save_manifest, "write the resolved manifest");

    std::uint64_t bn = 1 << 16;
    std::string bda = "1", bdb = "1";
    bool log_suppressed = false;
    auto* bounds = app.add_subcommand("bounds", "evaluate the five-term and theorem bounds");
    bounds->add_option("--n", bn, "grid size n = |A||B|")->capture_default_str();
    bounds->add_option("--da", bda, "d(A), rational")->capture_default_str();
    bounds->add_option("--db", bdb, "d(B), rational")->capture_default_str();
    bounds->add_flag("--log-suppressed", log_suppressed, "set every log factor to 1");

    for (CLI::App* sc : {gen, count, decompose, energy, calibrate, verify, sweep, bounds})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
        g.jobs_given = app.count("--jobs") > 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    // B defaults to A when no B option was given at all.
    const auto default_b_to_a = [&](CLI::App* cmd) {
        if (cmd->count("--gen-b") == 0 && cmd->count("--mb") == 0 && cmd->count("--set-b") == 0)
            sb = sa;
    };

    try {
        if (gen->parsed()) return cmd_gen_set(g, sa);
        if (count->parsed()) {
            default_b_to_a(count);
            return cmd_count(g, sa, sb, method);
        }
        if (decompose->parsed()) {
            default_b_to_a(decompose);
            return cmd_decompose(g, sa, sb);
        }
        if (energy->parsed()) return cmd_energy(g, sa, ek, el, tuple_form, rich_m, rich_tau);
        if (calibrate->parsed()) return cmd_calibrate(g, sa);
        if (verify->parsed()) {
            default_b_to_a(verify);
            return cmd_verify(g, sa, sb, lemma, manifest_path);
        }
        if (sweep->parsed()) {
            if (sweep->count("--gen-b") == 0) sb = sa;
            return cmd_sweep(g, sa, sb, sizes, manifest_path, save_manifest);
        }
        if (bounds->parsed()) return cmd_bounds(g, bn, bda, bdb, log_suppressed);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation (bug): " << e.what() << '\n';
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
