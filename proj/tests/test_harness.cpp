#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "mpns/config.hpp"
#include "mpns/fft.hpp"
#include "mpns/generators.hpp"
#include "mpns/manifest.hpp"
#include "mpns/operators.hpp"
#include "mpns/run.hpp"
#include "mpns/snapshot.hpp"
#include "mpns/solver.hpp"
#include "test_util.hpp"

using namespace mpns;
using namespace mpns::testing;
namespace fs = std::filesystem;

namespace {
constexpr double kPi = std::numbers::pi;

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunConfig tiny_run_config(const std::string& dir) {
    RunConfig cfg;
    cfg.seed = 42;
    cfg.solver.grid = Grid(8);
    cfg.solver.dt = 1e-3;
    cfg.solver.t_end = 5e-3;
    cfg.initial.kind = GeneratorKind::RandomDivFree;
    cfg.initial.amplitude = 0.5;
    cfg.initial.omega_amplitude = 0.25;
    cfg.monitor.cadence = 1;
    cfg.monitor.serrin_pairs = {{std::numeric_limits<double>::infinity(), 2.0, ""}};
    cfg.output.directory = dir;
    return cfg;
}

}  // namespace

TEST_CASE("Taylor-Green initial data: exact energy and zero omega") {
    Grid g(32);
    GeneratorSpec spec;
    spec.kind = GeneratorKind::TaylorGreen;
    const State s = generate_initial(spec, g, 0);
    const double e = std::pow(spectral_l2(s.u), 2);
    CHECK(rel_err(e, 2.0 * std::pow(kPi, 3)) < 1e-12);  // ~62.0126
    CHECK(spectral_l2(s.w) == 0.0);
    CHECK(relative_divergence(s.u) < 1e-13);
    CHECK(s.t == 0.0);
}

TEST_CASE("SingleMode k=(0,0,1): d3 norm equals the full norm") {
    Grid g(16);
    GeneratorSpec spec;
    spec.kind = GeneratorKind::SingleMode;
    spec.mode = {0, 0, 1};
    const State s = generate_initial(spec, g, 0);
    const double d3 = spectral_l2(partial(s.u, 3));
    CHECK(rel_err(d3, spectral_l2(s.u)) < 1e-12);
    CHECK(relative_divergence(s.u) < 1e-13);
    CHECK(spectral_l2(s.u) > 0.0);
}

TEST_CASE("RandomDivFree: solenoidal, normalized, deterministic") {
    Grid g(16);
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RandomDivFree;
    spec.amplitude = 2.0;
    spec.omega_amplitude = 0.5;
    spec.slope = 2.0;
    const State a = generate_initial(spec, g, 42);
    const State b = generate_initial(spec, g, 42);
    const State c = generate_initial(spec, g, 43);
    CHECK(relative_divergence(a.u) < 1e-12);
    CHECK(rel_err(spectral_l2(a.u), 2.0) < 1e-12);
    CHECK(rel_err(spectral_l2(a.w), 0.5) < 1e-12);
    CHECK(max_mode_diff(a.u, b.u) == 0.0);  // bitwise reproducible
    CHECK(max_mode_diff(a.w, b.w) == 0.0);
    CHECK(max_mode_diff(a.u, c.u) > 1e-6);  // a different seed differs

    GeneratorSpec no_omega = spec;
    no_omega.omega_amplitude = 0.0;
    CHECK(spectral_l2(generate_initial(no_omega, g, 42).w) == 0.0);
}

TEST_CASE("generator names round-trip and reject unknowns") {
    for (const char* name : {"taylor_green", "random_div_free", "single_mode", "snapshot"})
        CHECK(generator_kind_name(generator_kind_from_name(name)) == name);
    CHECK_THROWS_AS(generator_kind_from_name("vortex_ring"), std::invalid_argument);
}

TEST_CASE("state snapshot: round trip preserves fields, grid and time") {
    const auto dir = fresh_dir("mpns_snap_test");
    const std::string path = (dir / "state.fld").string();
    Grid g(8);
    State s = random_state(g, 77, 1.0, 0.3);
    s.t = 0.375;
    write_state_snapshot(path, s);
    const State back = read_state_snapshot(path);
    CHECK(back.t == 0.375);
    CHECK(back.u.grid() == g);
    CHECK(max_mode_diff(back.u, s.u) < 1e-13);
    CHECK(max_mode_diff(back.w, s.w) < 1e-13);

    // generator route
    GeneratorSpec spec;
    spec.kind = GeneratorKind::SnapshotFile;
    spec.snapshot_path = path;
    const State viagen = generate_initial(spec, g, 0);
    CHECK(max_mode_diff(viagen.u, s.u) < 1e-13);
    fs::remove_all(dir);
}

TEST_CASE("field snapshot: 3-component round trip and magic validation") {
    const auto dir = fresh_dir("mpns_snap3_test");
    const std::string path = (dir / "field.fld").string();
    Grid g(8);
    VectorField v = to_real(random_state(g, 5, 1.0, 0.0).u);
    write_field_snapshot(path, v, 1.5);
    double t = 0.0;
    const VectorField back = read_field_snapshot(path, &t);
    CHECK(t == 1.5);
    CHECK(max_sample_diff(back[0], v[0]) == 0.0);  // bytes round trip exactly

    std::ofstream bad((dir / "bad.fld").string(), std::ios::binary);
    bad << "NOTMAGIC blah";
    bad.close();
    CHECK_THROWS_AS(read_field_snapshot((dir / "bad.fld").string()),
                    std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("config: JSON and TOML parse to the same configuration") {
    const std::string json_text = R"({
      "seed": 7,
      "grid": {"n": 16, "box_length": 6.283185307179586},
      "solver": {"dt": 0.002, "t_end": 0.5, "dealias": 0.6666666666666666,
                 "cfl_cap": 0.4, "nonlinear": true, "coupling": false,
                 "blowup_factor": 1e6},
      "initial": {"kind": "random_div_free", "amplitude": 1.5, "slope": 2.5,
                  "omega_amplitude": 0.5},
      "monitor": {"cadence": 5, "r": [0.25, 0.5],
                  "serrin_pairs": [["inf", 2.0], [6.0, 2.6666666666666665]],
                  "gronwall_constant": 1.0, "estimates": true,
                  "morrey_stride": 4},
      "output": {"directory": "outdir", "csv": true, "jsonl": true, "snapshot": false}
    })";
    const std::string toml_text = R"(
seed = 7

[grid]
n = 16
box_length = 6.283185307179586

[solver]
dt = 0.002
t_end = 0.5
dealias = 0.6666666666666666
cfl_cap = 0.4
nonlinear = true
coupling = false
blowup_factor = 1e6

[initial]
kind = "random_div_free"
amplitude = 1.5
slope = 2.5
omega_amplitude = 0.5

[monitor]
cadence = 5
r = [0.25, 0.5]
serrin_pairs = [["inf", 2.0], [6.0, 2.6666666666666665]]
gronwall_constant = 1.0
estimates = true
morrey_stride = 4

[output]
directory = "outdir"
csv = true
jsonl = true
snapshot = false
)";
    const RunConfig a = parse_run_config_json(json_text);
    const RunConfig b = parse_run_config_toml(toml_text);
    CHECK(run_config_to_json(a) == run_config_to_json(b));
    CHECK(a.seed == 7);
    CHECK(a.solver.grid.n == 16);
    CHECK(a.solver.coupling == false);
    CHECK(a.monitor.r_values == std::vector<double>{0.25, 0.5});
    REQUIRE(a.monitor.serrin_pairs.size() == 2);
    CHECK(std::isinf(a.monitor.serrin_pairs[0].alpha));
    CHECK(a.solver.cfl_cap.has_value());
    CHECK(*a.solver.cfl_cap == 0.4);
}

TEST_CASE("config files: extension picks the parser, both formats agree") {
    const RunConfig a =
        parse_run_config_file(std::string(MPNS_TEST_DATA_DIR) + "/tg_small.json");
    const RunConfig b =
        parse_run_config_file(std::string(MPNS_TEST_DATA_DIR) + "/tg_small.toml");
    CHECK(run_config_to_json(a) == run_config_to_json(b));
    CHECK(a.solver.grid.n == 16);
    CHECK(a.initial.kind == GeneratorKind::TaylorGreen);
    CHECK_THROWS_AS(parse_run_config_file("/nonexistent/config.json"), std::runtime_error);
}

TEST_CASE("config validation: bad values are rejected, cfl 0 disables the cap") {
    RunConfig cfg = tiny_run_config("x");
    cfg.monitor.r_values = {1.5};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    CHECK_THROWS_AS(parse_run_config_json(R"({"grid": {"n": 7}})"), std::invalid_argument);
    CHECK_THROWS_AS(
        parse_run_config_json(
            R"({"grid": {"n": 8}, "monitor": {"serrin_pairs": [[2.0, 4.0]]}})"),
        std::invalid_argument);
    const RunConfig nocap =
        parse_run_config_json(R"({"grid": {"n": 8}, "solver": {"cfl_cap": 0.0}})");
    CHECK(!nocap.solver.cfl_cap.has_value());
}

TEST_CASE("sha256: FIPS known answers and combined hash sensitivity") {
    CHECK(sha256_hex(std::string{}) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex(std::string{"abc"}) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    const std::string a = combined_hash({{"x.csv", "aa"}, {"y.bin", "bb"}});
    const std::string b = combined_hash({{"y.bin", "bb"}, {"x.csv", "aa"}});
    const std::string c = combined_hash({{"x.csv", "aa"}, {"y.bin", "bc"}});
    CHECK(a == b);  // order independent
    CHECK(a != c);  // content sensitive
}

TEST_CASE("run: outputs, manifest hashes, determinism") {
    const auto dir1 = fresh_dir("mpns_run_a");
    const auto dir2 = fresh_dir("mpns_run_b");
    const RunResult r1 = run(tiny_run_config(dir1.string()));
    const RunResult r2 = run(tiny_run_config(dir2.string()));
    CHECK(r1.exit_code == 0);
    CHECK(r1.steps == 5);
    for (const char* name : {"trace.csv", "trace.jsonl", "final.fld", "manifest.json"})
        CHECK(fs::exists(dir1 / name));

    const auto manifest = nlohmann::json::parse(std::ifstream(dir1 / "manifest.json"));
    CHECK(manifest.at("aborted") == false);
    CHECK(manifest.at("hash").get<std::string>() == r1.combined_hash);
    // stored per-file hashes match a recomputation
    for (const auto& [name, hash] : manifest.at("outputs").items())
        CHECK(sha256_file_hex((dir1 / name).string()) == hash.get<std::string>());
    // identical config and seed: identical combined hash
    CHECK(r1.combined_hash == r2.combined_hash);

    // different seed: different bytes
    RunConfig other = tiny_run_config(dir2.string());
    other.seed = 43;
    const RunResult r3 = run(other);
    CHECK(r3.combined_hash != r1.combined_hash);
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("run: MPNS_OUTPUT_DIR override") {
    const auto envdir = fresh_dir("mpns_run_env");
    setenv("MPNS_OUTPUT_DIR", envdir.string().c_str(), 1);
    RunConfig cfg = tiny_run_config((envdir / "ignored").string());
    const RunResult r = run(cfg);
    unsetenv("MPNS_OUTPUT_DIR");
    CHECK(r.output_directory == envdir.string());
    CHECK(fs::exists(envdir / "manifest.json"));
    CHECK(!fs::exists(envdir / "ignored"));
    fs::remove_all(envdir);
}

TEST_CASE("run: solver abort produces a flagged manifest and partial outputs") {
    const auto dir = fresh_dir("mpns_run_abort");
    RunConfig cfg = tiny_run_config(dir.string());
    cfg.solver.cfl_cap = 1e-9;
    const RunResult r = run(cfg);
    CHECK(r.exit_code != 0);
    CHECK(r.aborted);
    const auto manifest = nlohmann::json::parse(std::ifstream(dir / "manifest.json"));
    CHECK(manifest.at("aborted") == true);
    CHECK(manifest.at("reason").get<std::string>().find("CFL") != std::string::npos);
    CHECK(fs::exists(dir / "trace.csv"));  // the initial sample was recorded
    std::ifstream jl(dir / "trace.jsonl");
    std::string line;
    std::getline(jl, line);
    CHECK(nlohmann::json::parse(line).contains("blowup"));
    fs::remove_all(dir);
}

TEST_CASE("bench_inequalities: reproducible and thread-count independent") {
    BenchOptions opts;
    opts.n = 8;
    opts.xr_trials = 3;
    const BenchSummary a = bench_inequalities(3, {0.5}, 11, opts);
    const BenchSummary b = bench_inequalities(3, {0.5}, 11, opts);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].observed_ratio == b.records[i].observed_ratio);
        CHECK(a.records[i].name == b.records[i].name);
    }
    BenchOptions threaded = opts;
    threaded.threads = 3;
    const BenchSummary c = bench_inequalities(3, {0.5}, 11, threaded);
    for (size_t i = 0; i < a.records.size(); ++i)
        CHECK(a.records[i].observed_ratio == c.records[i].observed_ratio);

    // expected record kinds are present with finite max ratios
    for (const char* key :
         {"lemma23_besov_interpolation", "bilinear_morrey_besov",
          "anisotropic_gagliardo_nirenberg", "lemma25_four_factor_beta=2",
          "xr_lower_bound_vs_morrey"}) {
        bool found = false;
        for (const auto& [k, v] : a.max_ratios)
            if (k.find(key) != std::string::npos) {
                found = true;
                CHECK(std::isfinite(v));
            }
        CHECK(found);
    }
    // the beta = 2 collapse is exact for every member
    for (const auto& [k, v] : a.max_ratios)
        if (k.find("beta=2") != std::string::npos) CHECK(v == 1.0);
}

TEST_CASE("bench_inequalities: JSONL report with summary line") {
    const auto dir = fresh_dir("mpns_bench_out");
    BenchOptions opts;
    opts.n = 8;
    opts.xr_trials = 2;
    opts.output_path = (dir / "bench.jsonl").string();
    const BenchSummary s = bench_inequalities(2, {0.5}, 3, opts);
    std::ifstream in(opts.output_path);
    size_t lines = 0;
    std::string last;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) {
            last = line;
            ++lines;
        }
    CHECK(lines == s.records.size() + 1);
    const auto j = nlohmann::json::parse(last);
    CHECK(j.contains("summary"));
    fs::remove_all(dir);
}
