#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "trigrid/harness.hpp"

using namespace trigrid;

namespace {

ExperimentManifest small_manifest() {
    ExperimentManifest m;
    m.id = "unit";
    m.seed = 3;
    m.gen_a = GeneratorSpec::parse("random-convex");
    m.gen_b = GeneratorSpec::parse("uniform-random");
    m.size_a = 6;
    m.size_b = 5;
    m.k_policy = KPolicy::parse("2");
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("k policy parsing") {
    CHECK(KPolicy::parse("formula").mode == KPolicy::Mode::Formula);
    CHECK(KPolicy::parse("search").mode == KPolicy::Mode::Search);
    const KPolicy e = KPolicy::parse("7");
    CHECK(e.mode == KPolicy::Mode::Explicit);
    CHECK(e.value == 7);
    CHECK_THROWS_AS(KPolicy::parse("x"), ConfigError);
    CHECK_THROWS_AS(KPolicy::parse("0"), ConfigError);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("manifest save/load round-trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "trigrid_harness_test";
    fs::create_directories(dir);
    const fs::path path = dir / "manifest.json";
    ExperimentManifest m = small_manifest();
    m.target_area = make_scalar(3, 2);
    m.sweep_sizes = {4, 6};
    m.jobs = 4;
    m.save(path);
    const ExperimentManifest r = ExperimentManifest::load(path);
    CHECK(r.id == m.id);
    CHECK(r.seed == m.seed);
    CHECK(r.gen_a.to_string() == "random-convex");
    CHECK(r.gen_b.to_string() == "uniform-random");
    CHECK(r.size_a == 6);
    CHECK(r.size_b == 5);
    CHECK(r.target_area == make_scalar(3, 2));
    CHECK(r.k_policy.to_string() == "2");
    CHECK(r.sweep_sizes == std::vector<std::size_t>{4, 6});
    CHECK(r.jobs == 4);

    // file-backed sets: the manifest records the path and make_a loads it
    const fs::path setpath = dir / "a.txt";
    save_ground_set(gen_set(GeneratorSpec::parse("squares"), 5, 0), setpath);
    m.set_a_file = setpath.string();
    m.save(path);
    const ExperimentManifest rf = ExperimentManifest::load(path);
    CHECK(rf.set_a_file == setpath.string());
    CHECK(rf.make_a() == gen_set(GeneratorSpec::parse("squares"), 5, 0));
    CHECK(rf.make_b() == gen_set(rf.gen_b, rf.size_b, rf.seed));
    ExperimentManifest sweep_m = rf;
    sweep_m.sweep_sizes = {4};
    CHECK_THROWS_AS(run_sweep(sweep_m), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("fit_exponent worked examples") {
    CHECK(fit_exponent({{4, 16}, {8, 64}, {16, 256}}) == doctest::Approx(2.0).epsilon(1e-12));
    // U = c n^{2.2}
    std::vector<std::pair<double, double>> rows;
    for (double n : {16.0, 64.0, 256.0, 1024.0}) rows.push_back({n, 3.0 * std::pow(n, 2.2)});
    CHECK(fit_exponent(rows) == doctest::Approx(2.2).epsilon(1e-9));
    CHECK_THROWS_AS(fit_exponent({{4, 16}}), DomainError);
    CHECK_THROWS_AS(fit_exponent({{4, 16}, {8, 0}}), DomainError);  // only one positive row
}

TEST_CASE("default calibration family shape") {
    const GroundSet x = gen_set(GeneratorSpec::parse("squares"), 8, 0);
    const auto family = default_calibration_family(x, 5);
    REQUIRE(family.size() == 4);
    CHECK(family[0] == x);
    CHECK(family[1] == dilate(x, 2));
    CHECK(family[2].size() == x.size());
    CHECK(is_convex(family[2]));
    CHECK(family[3].size() == x.size());
    const DParam d = calibrate_default(x, 5);
    CHECK(d.value > 0);
    CHECK(d.value <= Scalar(BigInt(x.size())));
}

TEST_CASE("verify_lemma: rich-tuple rows reproduce the worked example") {
    ExperimentManifest m;
    m.gen_a = GeneratorSpec::parse("arithmetic:0,1");
    m.size_a = 2;  // A = {0,1}
    m.gen_b = m.gen_a;
    m.size_b = 2;
    const RatioReport report = verify_lemma(LemmaId::RichTuple, m);
    // rows: m in {3,4} x tau in {1,2}
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[1].lhs == Scalar(2));  // m=3, tau=2
    REQUIRE(report.rows[1].bound.exact.has_value());
    CHECK(*report.rows[1].bound.exact == Scalar(5));
    for (const RatioRow& row : report.rows) CHECK(row.verdict == Verdict::AssertedExact);
}

TEST_CASE("verify_lemma: delta-rich ratio is the empirical constant c(tau)") {
    ExperimentManifest m;
    m.gen_a = GeneratorSpec::parse("squares");
    m.size_a = 8;
    m.gen_b = m.gen_a;
    m.size_b = 8;
    const RatioReport report = verify_lemma(LemmaId::SchoenShkredov, m);
    // rows alternate delta-rich / trivial-tau per tau, tau = 1..|X|+1
    REQUIRE(report.rows.size() == 18);
    CHECK(report.rows[16].lhs == Scalar(0));  // tau = |X| + 1: delta <= |X|
    const GroundSet x = gen_set(m.gen_a, 8, m.seed);
    const DiffProfile prof = rep_function(x, x);
    for (std::size_t i = 0; i < report.rows.size(); i += 2) {
        const std::int64_t tau = static_cast<std::int64_t>(i / 2 + 1);
        const RatioRow& row = report.rows[i];
        CHECK(row.label == "delta-rich");
        const std::int64_t count = rich_diff_count(prof, tau);
        CHECK(row.lhs == Scalar(count));
        CHECK(row.ratio ==
              doctest::Approx(double(count) * double(tau * tau * tau) / 512.0).epsilon(1e-12));
        CHECK(report.rows[i + 1].verdict == Verdict::AssertedExact);
    }
}

TEST_CASE("verify_lemma: every lemma id runs and asserted rows hold") {
    const ExperimentManifest m = small_manifest();
    for (const std::string& name : lemma_names()) {
        const RatioReport report = verify_lemma(parse_lemma(name), m);
        CHECK(report.lemma == name);
        CHECK_FALSE(report.rows.empty());
        for (const RatioRow& row : report.rows) {
            if (row.verdict == Verdict::AssertedExact) {
                REQUIRE(row.bound.exact.has_value());
                CHECK(row.lhs <= *row.bound.exact);
            }
        }
    }
    CHECK_THROWS_AS(parse_lemma("nope"), ConfigError);
}

TEST_CASE("verify_lemma: class counts match classify_triangles") {
    const ExperimentManifest m = small_manifest();
    const GroundSet a = gen_set(m.gen_a, m.size_a, m.seed);
    const GroundSet b = gen_set(m.gen_b, m.size_b, m.seed);
    const DecompositionCounts c = classify_triangles(Grid(a, b, m.target_area), 2);
    const RatioReport rr = verify_lemma(LemmaId::RichRich, m);
    CHECK(rr.rows[0].lhs == Scalar(c.rr));
    const RatioReport pr = verify_lemma(LemmaId::PoorRich, m);
    CHECK(pr.rows[0].lhs == Scalar(c.pr + c.rp));
    const RatioReport pp = verify_lemma(LemmaId::PoorPoor, m);
    CHECK(pp.rows[0].lhs == Scalar(c.pp));
}

TEST_CASE("sliced and projected incidence sums match naive enumeration") {
    const ExperimentManifest m = small_manifest();
    const GroundSet a = gen_set(m.gen_a, m.size_a, m.seed);
    const GroundSet b = gen_set(m.gen_b, m.size_b, m.seed);
    const Grid grid(a, b, m.target_area);
    const std::int64_t k = 2;

    // naive: walk all (q, plane) pairs, classify by multiplicities
    BigInt sliced = 0, eta = 0;
    const auto planes = distinct_planes(grid);
    std::map<std::pair<Scalar, Scalar>, std::int64_t> bmult;
    for (const Scalar& x : b)
        for (const Scalar& y : b)
            for (const Scalar& z : b) bmult[{y - x, z - x}] += 1;
    for (const Scalar& x : b)
        for (const Scalar& y : b)
            for (const Scalar& z : b) {
                const std::int64_t wq = bmult.at({y - x, z - x});
                for (const PlaneH& h : planes) {
                    if (h.w >= k) continue;  // poor planes only
                    if (h.alpha * x + h.beta * y + h.gamma * z != h.rhs) continue;
                    if (wq >= k) sliced += h.w;              // rich point, poor plane
                    if (wq < k) eta += h.w;                  // per point: w(q) aggregates
                }
            }

    const RatioReport pr = verify_lemma(LemmaId::PoorRich, m);
    REQUIRE(pr.rows.size() >= 2);
    CHECK(pr.rows[1].label == "sliced-weighted-incidences");
    CHECK(pr.rows[1].lhs == Scalar(sliced));

    const RatioReport pp = verify_lemma(LemmaId::PoorPoor, m);
    REQUIRE(pp.rows.size() >= 2);
    CHECK(pp.rows[1].label == "eta-weighted-incidences");
    // eta counts each class once with weight w(q); the naive loop above
    // visits each of the w(q) members once, so the sums agree.
    CHECK(pp.rows[1].lhs == Scalar(eta));
}

TEST_CASE("rich points of X^3 equal the m=3 rich tuple count") {
    GeneratorSpec uni;
    uni.kind = GeneratorKind::UniformRandom;
    for (std::uint64_t seed : {2u, 9u}) {
        const GroundSet x = gen_set(uni, 6, seed);
        for (std::int64_t k = 1; k <= 6; ++k)
            CHECK(rich_points(x, k).count == rich_tuple_count(x, 3, k));
    }
}

TEST_CASE("run_sweep cross-checks the oracle and fits the slope") {
    ExperimentManifest m;
    m.gen_a = GeneratorSpec::parse("random-convex");
    m.gen_b = m.gen_a;
    m.seed = 11;
    m.target_area = make_scalar(1, 2);
    m.sweep_sizes = {4, 5, 6, 7, 8};
    const SweepResult result = run_sweep(m);
    REQUIRE(result.rows.size() == 5);
    for (const SweepRow& row : result.rows) {
        CHECK(row.n == row.m * row.m);
        CHECK(row.bound > 0);
    }
    std::size_t positive = 0;
    for (const SweepRow& row : result.rows)
        if (row.count > 0) ++positive;
    if (positive >= 2) {
        REQUIRE(result.slope.has_value());
    } else {
        CHECK_FALSE(result.slope.has_value());
    }
    CHECK_THROWS_AS(run_sweep(ExperimentManifest{}), ConfigError);  // empty size list
}

TEST_CASE("emit: deterministic serialization and format rules") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "trigrid_emit_test";
    fs::create_directories(dir);

    RatioReport report;
    report.lemma = "demo";
    report.rows.push_back(make_row("r", "tau=1", make_scalar(1, 3),
                                   BoundValue::from_exact(make_scalar(2, 3)),
                                   Verdict::AssertedExact));
    const std::string csv = to_csv(report);
    CHECK(csv.find("1/3") != std::string::npos);   // rationals as p/q, never decimals
    CHECK(csv.find("0.333") == std::string::npos);
    CHECK(csv.rfind("label,params,lhs,bound,ratio,verdict\n", 0) == 0);

    const RatioReport empty{.lemma = "empty", .rows = {}};
    CHECK(to_csv(empty) == "label,params,lhs,bound,ratio,verdict\n");

    for (int round = 0; round < 2; ++round) {
        emit(report, OutputFormat::Csv, dir / "r.csv");
        emit(report, OutputFormat::Json, dir / "r.json");
    }
    std::ifstream c(dir / "r.csv"), j(dir / "r.json");
    std::stringstream cs, js;
    cs << c.rdbuf();
    js << j.rdbuf();
    CHECK(cs.str() == csv);
    CHECK(js.str() == to_json_string(report));

    DecompositionCounts counts{1, 2, 3, 4, 10, 2};
    const std::string dj = to_json_string(counts);
    CHECK(dj.find("\"rr\": 1") != std::string::npos);
    CHECK(dj.find("\"total\": 10") != std::string::npos);
    CHECK(dj.find("\"k\": 2") != std::string::npos);

    SweepResult sweep;
    sweep.rows.push_back({4, 16, 100, 2.5, 40.0, 123.0});
    const std::string sc = to_csv(sweep);
    CHECK(sc.rfind("m,n,count,bound,ratio\n", 0) == 0);
    CHECK(sc.find("elapsed") == std::string::npos);  // timings never reach files
    CHECK(to_json_string(sweep).find("elapsed") == std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("format_double emits 17 significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_SUITE_END();
