#include "trigrid/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace trigrid {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw ConfigError("unknown output format '" + text + "' (want csv or json)");
}

KPolicy KPolicy::parse(const std::string& text) {
    KPolicy policy;
    if (text == "formula") {
        policy.mode = Mode::Formula;
    } else if (text == "search") {
        policy.mode = Mode::Search;
    } else {
        policy.mode = Mode::Explicit;
        try {
            policy.value = std::stoll(text);
        } catch (const std::exception&) {
            throw ConfigError("k policy must be an integer, 'formula', or 'search'");
        }
        if (policy.value < 1) throw ConfigError("explicit k must be >= 1");
    }
    return policy;
}

std::string KPolicy::to_string() const {
    switch (mode) {
        case Mode::Formula:
            return "formula";
        case Mode::Search:
            return "search";
        case Mode::Explicit:
            return std::to_string(value);
    }
    return "?";
}

LemmaId parse_lemma(const std::string& name) {
    if (name == "schoen-shkredov") return LemmaId::SchoenShkredov;
    if (name == "e3") return LemmaId::E3;
    if (name == "rich-tuple") return LemmaId::RichTuple;
    if (name == "krich") return LemmaId::KRich;
    if (name == "kproj") return LemmaId::KProj;
    if (name == "rich-rich") return LemmaId::RichRich;
    if (name == "poor-rich") return LemmaId::PoorRich;
    if (name == "poor-poor") return LemmaId::PoorPoor;
    throw ConfigError("unknown lemma id '" + name + "'");
}

std::string lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::SchoenShkredov: return "schoen-shkredov";
        case LemmaId::E3: return "e3";
        case LemmaId::RichTuple: return "rich-tuple";
        case LemmaId::KRich: return "krich";
        case LemmaId::KProj: return "kproj";
        case LemmaId::RichRich: return "rich-rich";
        case LemmaId::PoorRich: return "poor-rich";
        case LemmaId::PoorPoor: return "poor-poor";
    }
    return "?";
}

std::vector<std::string> lemma_names() {
    return {"schoen-shkredov", "e3", "rich-tuple", "krich",
            "kproj",           "rich-rich", "poor-rich", "poor-poor"};
}

// --- manifest persistence ----------------------------------------------------

ExperimentManifest ExperimentManifest::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open manifest: " + path.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("manifest parse error in " + path.string() + ": " + e.what());
    }
    ExperimentManifest m;
    m.id = j.value("id", m.id);
    m.seed = j.value("seed", m.seed);
    m.gen_a = GeneratorSpec::parse(j.value("gen_a", std::string("squares")));
    m.gen_b = GeneratorSpec::parse(j.value("gen_b", std::string("squares")));
    m.set_a_file = j.value("set_a_file", std::string());
    m.set_b_file = j.value("set_b_file", std::string());
    m.size_a = j.value("size_a", m.size_a);
    m.size_b = j.value("size_b", m.size_b);
    m.target_area = parse_scalar(j.value("target_area", std::string("1")));
    if (m.target_area <= 0) throw InputError("manifest target_area must be positive");
    m.k_policy = KPolicy::parse(j.value("k_policy", std::string("formula")));
    m.sweep_sizes = j.value("sweep_sizes", m.sweep_sizes);
    m.output_dir = j.value("output_dir", m.output_dir);
    m.jobs = j.value("jobs", m.jobs);
    m.guard_override = j.value("guard_override", m.guard_override);
    return m;
}

void ExperimentManifest::save(const std::filesystem::path& path) const {
    ordered_json j;
    j["id"] = id;
    j["seed"] = seed;
    j["rng"] = kRngAlgorithm;
    j["gen_a"] = gen_a.to_string();
    j["gen_b"] = gen_b.to_string();
    if (!set_a_file.empty()) j["set_a_file"] = set_a_file;
    if (!set_b_file.empty()) j["set_b_file"] = set_b_file;
    j["size_a"] = size_a;
    j["size_b"] = size_b;
    j["target_area"] = format_scalar(target_area);
    j["k_policy"] = k_policy.to_string();
    j["sweep_sizes"] = sweep_sizes;
    j["output_dir"] = output_dir;
    j["jobs"] = jobs;
    j["guard_override"] = guard_override;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write manifest: " + path.string());
    out << j.dump(2) << '\n';
}

GroundSet ExperimentManifest::make_a() const {
    return set_a_file.empty() ? gen_set(gen_a, size_a, seed) : load_ground_set(set_a_file);
}

GroundSet ExperimentManifest::make_b() const {
    return set_b_file.empty() ? gen_set(gen_b, size_b, seed) : load_ground_set(set_b_file);
}

// --- calibration --------------------------------------------------------------

std::vector<GroundSet> default_calibration_family(const GroundSet& x, std::uint64_t seed) {
    std::vector<GroundSet> family;
    family.push_back(x);
    family.push_back(dilate(x, 2));
    GeneratorSpec conv;
    conv.kind = GeneratorKind::RandomConvex;
    family.push_back(gen_set(conv, x.size(), mix64(seed ^ 0xc0117ab1eull)));
    GeneratorSpec uni;
    uni.kind = GeneratorKind::UniformRandom;
    family.push_back(gen_set(uni, x.size(), mix64(seed ^ 0x5eedfacell)));
    return family;
}

DParam calibrate_default(const GroundSet& x, std::uint64_t seed) {
    std::vector<std::int64_t> taus;
    for (std::int64_t t = 1; t <= static_cast<std::int64_t>(x.size()); ++t) taus.push_back(t);
    return calibrate_d(x, default_calibration_family(x, seed), taus);
}

// --- lemma verification -------------------------------------------------------

namespace {

std::int64_t resolve_k(const KPolicy& policy, std::uint64_t n, const Scalar& da, const Scalar& db) {
    if (n < 2 && policy.mode != KPolicy::Mode::Explicit) return 1;
    switch (policy.mode) {
        case KPolicy::Mode::Explicit:
            return policy.value;
        case KPolicy::Mode::Formula: {
            BoundInput in{n, da, db, false};
            return optimal_k(in).k_formula;
        }
        case KPolicy::Mode::Search: {
            BoundInput in{n, da, db, false};
            return optimal_k(in).k_search;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<std::int64_t> dyadic_k_sweep(std::size_t top) {
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 2; k <= static_cast<std::int64_t>(top); k *= 2) ks.push_back(k);
    if (ks.empty() || ks.back() != static_cast<std::int64_t>(top))
        ks.push_back(static_cast<std::int64_t>(top));
    return ks;
}

struct LemmaContext {
    GroundSet a;
    GroundSet b;
    DParam da;
    DParam db;
    std::uint64_t n = 0;  // |A| * |B|
};

LemmaContext make_context(const ExperimentManifest& m) {
    GroundSet a = m.make_a();
    GroundSet b = m.make_b();
    DParam da = calibrate_default(a, m.seed);
    DParam db = calibrate_default(b, m.seed + 1);
    const std::uint64_t n = a.size() * b.size();
    return {std::move(a), std::move(b), std::move(da), std::move(db), n};
}

void lemma_schoen_shkredov(const LemmaContext& ctx, RatioReport& report) {
    const GroundSet& x = ctx.a;
    const DiffProfile profile = rep_function(x, x);
    const BigInt nx(x.size());
    // tau = |X| + 1 shows the vanishing regime: delta <= |X| everywhere.
    for (std::int64_t tau = 1; tau <= static_cast<std::int64_t>(x.size()) + 1; ++tau) {
        const std::int64_t count = rich_diff_count(profile, tau);
        const BigInt t(tau);
        // Lemma bound |X||Y|^2 / tau^3 with Y = X: the ratio is exactly the
        // empirical constant c(tau) = count tau^3 / |X|^3.
        const Scalar bound = make_scalar(nx * nx * nx, t * t * t);
        report.rows.push_back(make_row("delta-rich", "tau=" + std::to_string(tau), Scalar(count),
                                       BoundValue::from_exact(bound), Verdict::ReportOnly));
        const Scalar trivial = make_scalar(nx * nx, t);
        if (Scalar(count) > trivial)
            throw TheoremViolation("delta-rich count exceeded |X||Y|/tau");
        report.rows.push_back(make_row("trivial-tau", "tau=" + std::to_string(tau), Scalar(count),
                                       BoundValue::from_exact(trivial), Verdict::AssertedExact));
    }
}

void lemma_e3(const LemmaContext& ctx, RatioReport& report) {
    const GroundSet& a = ctx.a;
    const EnergyValue e3 = energy_k(a, 3);
    const double na = static_cast<double>(a.size());
    const double bound = to_double(ctx.da.value) * na * na * na * (a.size() <= 2 ? 1.0 : std::log2(na));
    report.rows.push_back(make_row("e3", "|A|=" + std::to_string(a.size()) +
                                             ",d(A)=" + format_scalar(ctx.da.value),
                                   Scalar(e3.value), BoundValue::from_approx(bound),
                                   Verdict::ReportOnly));
}

void lemma_rich_tuple(const LemmaContext& ctx, RatioReport& report) {
    const GroundSet& a = ctx.a;
    for (int m : {3, 4}) {
        for (std::int64_t tau = 1; tau <= static_cast<std::int64_t>(a.size()); ++tau) {
            report.rows.push_back(verify_rich_tuple_bound(a, m, tau));
        }
    }
}

void lemma_krich(const LemmaContext& ctx, RatioReport& report) {
    const GroundSet& x = ctx.a;
    const double n = static_cast<double>(x.size()) * static_cast<double>(x.size());
    const double da = to_double(ctx.da.value);
    const double logn = n <= 2 ? 1.0 : std::log2(n);
    for (std::int64_t k : dyadic_k_sweep(x.size())) {
        const std::int64_t lhs = rich_points(x, k).count;
        const double kd = static_cast<double>(k);
        const double bound = da * da * n * n * logn / (kd * kd * kd);
        report.rows.push_back(make_row("krich", "k=" + std::to_string(k), Scalar(lhs),
                                       BoundValue::from_approx(bound), Verdict::ReportOnly));
    }
}

void lemma_kproj(const LemmaContext& ctx, RatioReport& report) {
    const GroundSet& x = ctx.a;
    const double n = static_cast<double>(x.size()) * static_cast<double>(x.size());
    const double da = to_double(ctx.da.value);
    for (std::int64_t k : dyadic_k_sweep(x.size())) {
        const std::int64_t lhs = project_rich(x, k);
        const double kd = static_cast<double>(k);
        const double bound = da * std::pow(n, 1.5) / (kd * kd);
        report.rows.push_back(make_row("kproj", "k=" + std::to_string(k), Scalar(lhs),
                                       BoundValue::from_approx(bound), Verdict::ReportOnly));
    }
}

// Multiplicity classes of B^3 under diagonal shifts: key (y-x, z-x) ->
// (representative triple, class size). The class size is w(q) for each
// member q.
std::map<std::pair<Scalar, Scalar>, std::pair<Triple, std::int64_t>> b_diag_classes(
    const GroundSet& b) {
    std::map<std::pair<Scalar, Scalar>, std::pair<Triple, std::int64_t>> classes;
    for (const Scalar& x : b)
        for (const Scalar& y : b)
            for (const Scalar& z : b) {
                auto [it, inserted] =
                    classes.try_emplace({y - x, z - x}, std::make_pair(Triple{x, y, z}, 0));
                it->second.second += 1;
            }
    return classes;
}

// Exact poor-rich incidence sum over horizontal slices: pairs (q, h) with
// q in B^3 k-rich, h a k-poor plane through q, counted with the plane
// multiplicity w(h).
BigInt sliced_weighted_incidences(const Grid& grid, std::int64_t k) {
    const auto bclasses = b_diag_classes(grid.b);
    std::vector<PlaneH> poor;
    for (const PlaneH& h : distinct_planes(grid))
        if (h.w < k) poor.push_back(h);
    BigInt total = 0;
    for (const Scalar& z : grid.b) {
        std::vector<PlanarPoint> pts;
        for (const Scalar& x : grid.b)
            for (const Scalar& y : grid.b)
                if (bclasses.at({y - x, z - x}).second >= k) pts.push_back({x, y, 1});
        if (pts.empty() || poor.empty()) continue;
        const auto lines = slice_lines(grid, z, poor);
        total += count_incidences(pts, lines, true);
    }
    return total;
}

// Exact poor-poor incidence sum in the eta chart: pairs (q-class, h) with
// both k-poor and q on h, counted with w(q) w(h).
BigInt eta_weighted_incidences(const Grid& grid, std::int64_t k) {
    std::vector<std::pair<Triple, std::int64_t>> poor_points;
    for (const auto& [key, rep] : b_diag_classes(grid.b))
        if (rep.second < k) poor_points.push_back({rep.first, rep.second});
    std::vector<PlaneH> poor;
    for (const PlaneH& h : distinct_planes(grid))
        if (h.w < k) poor.push_back(h);
    if (poor_points.empty() || poor.empty()) return 0;
    const EtaProjectionResult proj = eta_projection(poor_points, poor, grid.target_area);
    return count_incidences(proj.points, proj.lines, true);
}

void lemma_triangle_classes(LemmaId id, const ExperimentManifest& m, const LemmaContext& ctx,
                            RatioReport& report) {
    const Grid grid(ctx.a, ctx.b, m.target_area);
    const std::int64_t k = resolve_k(m.k_policy, ctx.n, ctx.da.value, ctx.db.value);
    const DecompositionCounts counts = classify_triangles(grid, k, m.count_options());
    const double n = static_cast<double>(ctx.n);
    const double logn = n <= 2 ? 1.0 : std::log2(n);
    const double da = to_double(ctx.da.value);
    const double db = to_double(ctx.db.value);
    const double kd = static_cast<double>(k);
    const std::string kparam = "k=" + std::to_string(k);

    switch (id) {
        case LemmaId::RichRich: {
            const double bound = da * da * db * std::pow(n, 3.5) * logn / std::pow(kd, 5.0) + n * n;
            report.rows.push_back(make_row("rich-rich", kparam, Scalar(counts.rr),
                                           BoundValue::from_approx(bound), Verdict::ReportOnly));
            // Both raw numbers behind the n^2 term: the equal-abscissa
            // triangle subcount, and the count of vertical point pairs.
            const std::int64_t eq = count_equal_abscissa_triangles(grid, m.count_options());
            report.rows.push_back(make_row("equal-abscissa-triangles", kparam, Scalar(eq),
                                           BoundValue::from_approx(n * n), Verdict::ReportOnly));
            const BigInt nb(ctx.b.size());
            const BigInt pairs = BigInt(ctx.a.size()) * nb * (nb - 1) / 2;
            report.rows.push_back(make_row("equal-abscissa-pairs", "", Scalar(pairs),
                                           BoundValue::from_approx(std::pow(n, 1.5)),
                                           Verdict::ReportOnly));
            break;
        }
        case LemmaId::PoorRich: {
            const double bound =
                (std::pow(da, 4.0 / 3.0) + std::pow(db, 4.0 / 3.0)) * std::pow(n, 2.5) *
                    std::pow(logn, 2.0 / 3.0) / std::pow(kd, 5.0 / 3.0) +
                (da * da + db * db) * n * n * logn / (kd * kd) +
                n * n * (k >= 2 ? std::log2(kd) : 0.0);
            report.rows.push_back(make_row("poor-rich+rich-poor", kparam,
                                           Scalar(counts.pr + counts.rp),
                                           BoundValue::from_approx(bound), Verdict::ReportOnly));
            // the sliced point-line incidence sum the class bound majorizes
            report.rows.push_back(make_row("sliced-weighted-incidences", kparam,
                                           Scalar(sliced_weighted_incidences(grid, k)),
                                           BoundValue::from_approx(bound), Verdict::ReportOnly));
            if (k >= 2) {
                for (const DyadicClass& cls : dyadic_plane_classes(grid, k)) {
                    report.rows.push_back(make_row(
                        "dyadic-H" + std::to_string(cls.i), kparam, Scalar(cls.plane_count),
                        BoundValue::from_exact(cls.trivial_bound), Verdict::AssertedExact));
                }
            }
            break;
        }
        case LemmaId::PoorPoor: {
            const double bound =
                n * n * std::pow(kd, 2.0 / 3.0) + std::pow(n, 1.5) * kd * (k >= 2 ? std::log2(kd) : 0.0);
            report.rows.push_back(make_row("poor-poor", kparam, Scalar(counts.pp),
                                           BoundValue::from_approx(bound), Verdict::ReportOnly));
            // the projected incidence sum behind the class bound
            report.rows.push_back(make_row("eta-weighted-incidences", kparam,
                                           Scalar(eta_weighted_incidences(grid, k)),
                                           BoundValue::from_approx(bound), Verdict::ReportOnly));
            break;
        }
        default:
            throw std::logic_error("unreachable");
    }
}

}  // namespace

RatioReport verify_lemma(LemmaId id, const ExperimentManifest& manifest) {
    RatioReport report;
    report.lemma = lemma_name(id);
    const LemmaContext ctx = make_context(manifest);
    switch (id) {
        case LemmaId::SchoenShkredov:
            lemma_schoen_shkredov(ctx, report);
            break;
        case LemmaId::E3:
            lemma_e3(ctx, report);
            break;
        case LemmaId::RichTuple:
            lemma_rich_tuple(ctx, report);
            break;
        case LemmaId::KRich:
            lemma_krich(ctx, report);
            break;
        case LemmaId::KProj:
            lemma_kproj(ctx, report);
            break;
        case LemmaId::RichRich:
        case LemmaId::PoorRich:
        case LemmaId::PoorPoor:
            lemma_triangle_classes(id, manifest, ctx, report);
            break;
    }
    return report;
}

// --- sweep ---------------------------------------------------------------------

double fit_exponent(const std::vector<std::pair<double, double>>& n_count_rows) {
    std::vector<std::pair<double, double>> usable;
    for (const auto& [n, u] : n_count_rows)
        if (n > 0 && u > 0) usable.push_back({std::log(n), std::log(u)});
    if (usable.size() < 2) throw DomainError("fit_exponent needs at least 2 rows with U > 0");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : usable) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double nn = static_cast<double>(usable.size());
    const double denom = nn * sxx - sx * sx;
    if (denom == 0) throw DomainError("fit_exponent: degenerate abscissas");
    return (nn * sxy - sx * sy) / denom;
}

SweepResult run_sweep(const ExperimentManifest& manifest) {
    if (manifest.sweep_sizes.empty()) throw ConfigError("sweep requires a nonempty size list");
    if (!manifest.set_a_file.empty() || !manifest.set_b_file.empty())
        throw ConfigError("sweep regenerates sets per size; file-backed sets are not usable");
    std::vector<std::size_t> sizes = manifest.sweep_sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    SweepResult result;
    for (std::size_t m : sizes) {
        const auto started = std::chrono::steady_clock::now();
        const GroundSet a = gen_set(manifest.gen_a, m, manifest.seed);
        const GroundSet b = gen_set(manifest.gen_b, m, manifest.seed);
        const Grid grid(a, b, manifest.target_area);
        std::int64_t count = 0;
        try {
            count = count_unit_triangles_incidence(grid, manifest.count_options());
            if (m <= 8) {
                const std::int64_t oracle =
                    count_unit_triangles_bruteforce(grid, manifest.count_options());
                if (oracle != count)
                    throw TheoremViolation("sweep oracle cross-check failed at m=" +
                                           std::to_string(m));
            }
        } catch (const ResourceError& e) {
            throw ResourceError("sweep size m=" + std::to_string(m) + ": " + e.what());
        }
        SweepRow row;
        row.m = m;
        row.n = static_cast<std::uint64_t>(m) * m;
        row.count = count;
        row.bound = theorem_bound({row.n, 1, 1, false});
        row.ratio = row.bound == 0 ? 0 : static_cast<double>(count) / row.bound;
        row.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        result.rows.push_back(row);
    }
    std::vector<std::pair<double, double>> pts;
    std::size_t positive = 0;
    for (const SweepRow& row : result.rows) {
        pts.push_back({static_cast<double>(row.n), static_cast<double>(row.count)});
        if (row.count > 0) ++positive;
    }
    if (positive >= 2) result.slope = fit_exponent(pts);
    return result;
}

// --- serialization ---------------------------------------------------------------

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

std::string bound_text(const BoundValue& b) {
    if (b.exact) return format_scalar(*b.exact);
    return format_double(b.approx);
}

void json_bound(ordered_json& j, const BoundValue& b) {
    j["bound"] = bound_text(b);
    j["bound_value"] = b.approx;
    j["bound_exact"] = b.exact.has_value();
}

// Minimal CSV quoting: fields holding a comma, quote, or newline are quoted
// with internal quotes doubled. Deterministic (quoting depends only on the
// field content).
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

void write_file(const std::string& payload, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write output file: " + path.string());
    out << payload;
    if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace

std::string to_csv(const RatioReport& report) {
    std::string out = "label,params,lhs,bound,ratio,verdict\n";
    for (const RatioRow& row : report.rows) {
        out += csv_field(row.label) + "," + csv_field(row.params) + "," +
               format_scalar(row.lhs) + "," + bound_text(row.bound) + "," +
               format_double(row.ratio) + "," + to_string(row.verdict) + "\n";
    }
    return out;
}

std::string to_csv(const SweepResult& result) {
    std::string out = "m,n,count,bound,ratio\n";
    for (const SweepRow& row : result.rows) {
        out += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
               std::to_string(row.count) + "," + format_double(row.bound) + "," +
               format_double(row.ratio) + "\n";
    }
    return out;
}

std::string to_csv(const DecompositionCounts& counts) {
    std::string out = "rr,rp,pr,pp,total,k\n";
    out += std::to_string(counts.rr) + "," + std::to_string(counts.rp) + "," +
           std::to_string(counts.pr) + "," + std::to_string(counts.pp) + "," +
           std::to_string(counts.total) + "," + std::to_string(counts.k) + "\n";
    return out;
}

std::string to_json_string(const RatioReport& report) {
    ordered_json j;
    j["lemma"] = report.lemma;
    j["rows"] = ordered_json::array();
    for (const RatioRow& row : report.rows) {
        ordered_json r;
        r["label"] = row.label;
        r["params"] = row.params;
        r["lhs"] = format_scalar(row.lhs);
        json_bound(r, row.bound);
        r["ratio"] = row.ratio;
        r["verdict"] = to_string(row.verdict);
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
}

std::string to_json_string(const SweepResult& result) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const SweepRow& row : result.rows) {
        ordered_json r;
        r["m"] = row.m;
        r["n"] = row.n;
        r["count"] = row.count;
        r["bound"] = row.bound;
        r["ratio"] = row.ratio;
        j["rows"].push_back(std::move(r));
    }
    if (result.slope)
        j["slope"] = *result.slope;
    else
        j["slope"] = nullptr;
    return j.dump(2) + "\n";
}

std::string to_json_string(const DecompositionCounts& counts) {
    ordered_json j;
    j["rr"] = counts.rr;
    j["rp"] = counts.rp;
    j["pr"] = counts.pr;
    j["pp"] = counts.pp;
    j["total"] = counts.total;
    j["k"] = counts.k;
    return j.dump(2) + "\n";
}

void emit(const RatioReport& report, OutputFormat format, const std::filesystem::path& path) {
    write_file(format == OutputFormat::Csv ? to_csv(report) : to_json_string(report), path);
}

void emit(const SweepResult& result, OutputFormat format, const std::filesystem::path& path) {
    write_file(format == OutputFormat::Csv ? to_csv(result) : to_json_string(result), path);
}

void emit(const DecompositionCounts& counts, OutputFormat format,
          const std::filesystem::path& path) {
    write_file(format == OutputFormat::Csv ? to_csv(counts) : to_json_string(counts), path);
}

}  // namespace trigrid
