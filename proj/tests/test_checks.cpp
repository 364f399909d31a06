#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "mpns/checks.hpp"
#include "mpns/fft.hpp"
#include "test_util.hpp"

using namespace mpns;
using namespace mpns::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("lemma 2.3 check: closed form for cos(3x), r = 1/2") {
    Grid g(32);
    ScalarField f = sample_field(g, [](double x, double, double) { return std::cos(3 * x); });
    const InequalityCheck c = check_lemma23(f, 0.5);
    // besov = 2^{1/2}||f||_2 (annulus j=1); rhs = ||f||^{1/2} (3||f||)^{1/2}
    CHECK(rel_err(c.observed_ratio, std::sqrt(2.0) / std::sqrt(3.0)) < 1e-12);  // 0.8165
    CHECK(c.lhs > 0.0);
    CHECK(c.rhs_without_constant > 0.0);
}

TEST_CASE("lemma 2.3 check: ratio is exactly 1 on an annulus boundary mode") {
    Grid g(32);
    ScalarField f = sample_field(g, [](double x, double, double) { return std::cos(2 * x); });
    const InequalityCheck c = check_lemma23(f, 0.5);
    CHECK(rel_err(c.observed_ratio, 1.0) < 1e-12);
}

TEST_CASE("lemma 2.3 check: constant fields are degenerate (zero rhs)") {
    Grid g(16);
    ScalarField c = sample_field(g, [](double, double, double) { return 1.0; });
    CHECK_THROWS_AS(check_lemma23(c, 0.5), std::domain_error);
}

TEST_CASE("lemma 2.3 check: finite max ratio over a random ensemble") {
    Grid g(16);
    double max_ratio = 0.0;
    for (int m = 0; m < 100; ++m) {
        const ScalarField f = random_real_scalar(g, 1000 + m);
        const InequalityCheck c = check_lemma23(f, 0.5);
        CHECK(std::isfinite(c.observed_ratio));
        max_ratio = std::max(max_ratio, c.observed_ratio);
    }
    CHECK(max_ratio > 0.0);
    CHECK(max_ratio < 10.0);
}

TEST_CASE("bilinear check: closed form for f = 1, g = cos(3x), r = 1/2") {
    Grid g(32);
    ScalarField f = sample_field(g, [](double, double, double) { return 1.0; });
    ScalarField gg = sample_field(g, [](double x, double, double) { return std::cos(3 * x); });
    const InequalityCheck c = check_bilinear(f, gg, 0.5);
    const double morrey_one = morrey_norm(f, 2.0, 6.0);
    CHECK(rel_err(c.observed_ratio, 1.0 / (std::sqrt(2.0) * morrey_one)) < 1e-12);
    CHECK(rel_err(c.observed_ratio, 0.195) < 0.02);
}

TEST_CASE("bilinear check: zero g gives zero lhs and zero ratio") {
    Grid g(16);
    ScalarField f = random_real_scalar(g, 5);
    const InequalityCheck c = check_bilinear(f, ScalarField::real_zeros(g), 0.5);
    CHECK(c.lhs == 0.0);
    CHECK(c.observed_ratio == 0.0);
}

TEST_CASE("bilinear check: bounded ratios over a random ensemble") {
    Grid g(16);
    double max_ratio = 0.0;
    for (int m = 0; m < 100; ++m) {
        const ScalarField f = random_real_scalar(g, 2000 + m);
        const ScalarField gg = random_real_scalar(g, 3000 + m);
        const InequalityCheck c = check_bilinear(f, gg, 0.5);
        CHECK(std::isfinite(c.observed_ratio));
        max_ratio = std::max(max_ratio, c.observed_ratio);
    }
    CHECK(max_ratio > 0.0);
    CHECK(max_ratio < 10.0);
}

TEST_CASE("anisotropic GN check: proof instance alpha=lambda=2, gamma=6") {
    Grid g(32);
    ScalarField f = sample_field(g, [](double x, double y, double z) {
        return std::sin(x) * std::sin(y) * std::sin(z);
    });
    const InequalityCheck c = check_anisotropic_gn(f, 2.0, 2.0, 6.0);
    // ||f||_6 = (5/16)^{1/2} (2pi)^{1/2}; each ||d_i f||_2 = pi^{3/2}
    const double want = std::sqrt(5.0 / 16.0) * std::sqrt(2.0 * kPi) / std::pow(kPi, 1.5);
    CHECK(rel_err(c.observed_ratio, want) < 1e-12);
    CHECK(std::isfinite(c.observed_ratio));
}

TEST_CASE("anisotropic GN check: degenerate and invalid inputs are rejected") {
    Grid g(16);
    ScalarField c = sample_field(g, [](double, double, double) { return 1.0; });
    CHECK_THROWS_AS(check_anisotropic_gn(c, 2.0, 2.0, 6.0), std::invalid_argument);

    ScalarField f = random_real_scalar(g, 7);
    // exponent relation 1 + 3/gamma = 1/lambda + 2/alpha must hold exactly
    CHECK_THROWS_AS(check_anisotropic_gn(f, 2.0, 2.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(check_anisotropic_gn(f, 0.5, 2.0, 6.0), std::invalid_argument);
    // 1/lambda + 2/alpha must exceed 1
    CHECK_THROWS_AS(check_anisotropic_gn(f, 8.0, 8.0, 24.0 / 5.0), std::invalid_argument);
}

TEST_CASE("lemma 2.5 check: beta = 2 collapses to ratio exactly 1") {
    Grid g(16);
    ScalarField f = random_real_scalar(g, 11);
    const InequalityCheck c = check_lemma25(f, 2.0);
    CHECK(c.observed_ratio == 1.0);
}

TEST_CASE("lemma 2.5 check: beta = 6 agrees with the GN instance") {
    Grid g(16);
    ScalarField f = random_real_scalar(g, 13);
    const InequalityCheck a = check_lemma25(f, 6.0);
    const InequalityCheck b = check_anisotropic_gn(f, 2.0, 2.0, 6.0);
    CHECK(rel_err(a.observed_ratio, b.observed_ratio) < 1e-13);
}

TEST_CASE("lemma 2.5 check: range and zero-mean violations are rejected") {
    Grid g(16);
    ScalarField f = random_real_scalar(g, 17);
    CHECK_THROWS_AS(check_lemma25(f, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma25(f, 6.5), std::invalid_argument);
    ScalarField c = sample_field(g, [](double, double, double) { return 2.0; });
    CHECK_THROWS_AS(check_lemma25(c, 4.0), std::invalid_argument);
}

TEST_CASE("embedding chain: closed forms for a constant field") {
    Grid g(32);
    ScalarField c = sample_field(g, [](double, double, double) { return 2.0; });
    const double r = 0.5;
    const auto checks = check_embedding_chain(c, r, 2.0);
    REQUIRE(checks.size() == 2);
    // weak and strong L^{3/r} coincide for a constant
    CHECK(rel_err(checks[0].observed_ratio, 1.0) < 1e-12);
    const double weak = 2.0 * std::pow(std::pow(2 * kPi, 3.0), r / 3.0);
    const double morrey = morrey_norm(c, 2.0, 3.0 / r);
    CHECK(rel_err(checks[1].observed_ratio, morrey / weak) < 1e-12);
    CHECK(rel_err(checks[1].observed_ratio, 1.447) < 0.02);
}

TEST_CASE("embedding chain: zero field is skipped, bad exponents rejected") {
    Grid g(16);
    CHECK(check_embedding_chain(ScalarField::real_zeros(g), 0.5, 2.0).empty());
    ScalarField f = random_real_scalar(g, 19);
    CHECK_THROWS_AS(check_embedding_chain(f, 0.5, 7.0), std::invalid_argument);  // p > 3/r
    CHECK_THROWS_AS(check_embedding_chain(f, 0.5, 1.5), std::invalid_argument);  // p < 2
    CHECK_THROWS_AS(check_embedding_chain(f, 1.6, 2.0), std::invalid_argument);
}

TEST_CASE("embedding chain: weak norm never exceeds the strong norm") {
    Grid g(16);
    for (int m = 0; m < 50; ++m) {
        const ScalarField f = random_real_scalar(g, 5000 + m);
        const auto checks = check_embedding_chain(f, 0.5, 2.0);
        REQUIRE(checks.size() == 2);
        CHECK(checks[0].observed_ratio <= 1.0 + 1e-12);
    }
}

TEST_CASE("Xr lower bound stays inside the Morrey-side envelope across batches") {
    // paired ensemble: the multiplier-norm lower bound, normalized by the
    // M_{2,3/r} norm, has a stable envelope; a disjoint batch never escapes it
    Grid g(16);
    const int kmax = dealias_limit(16, 2.0 / 3.0);
    auto ratio_of = [&](uint64_t seed) {
        const ScalarField f = to_real(random_band_limited_scalar(g, seed, 1.0, kmax));
        const double lb = xr_lower_bound(f, 0.5, 4);
        const double m = morrey_norm(f, 2.0, 6.0);
        REQUIRE(m > 0.0);
        return lb / m;
    };
    double envelope = 0.0;
    for (int m = 0; m < 30; ++m) envelope = std::max(envelope, ratio_of(7000 + m));
    CHECK(envelope > 0.0);
    for (int m = 0; m < 30; ++m) CHECK(ratio_of(90000 + m) <= 1.05 * envelope);
}

TEST_CASE("checker results are reproducible bit-for-bit under a fixed seed") {
    Grid g(16);
    const ScalarField f1 = random_real_scalar(g, 4242);
    const ScalarField f2 = random_real_scalar(g, 4242);
    const InequalityCheck a = check_lemma23(f1, 0.5);
    const InequalityCheck b = check_lemma23(f2, 0.5);
    CHECK(a.observed_ratio == b.observed_ratio);
    CHECK(a.lhs == b.lhs);
}

TEST_CASE("InequalityCheck serializes as a JSON line") {
    InequalityCheck c;
    c.name = "lemma23_besov_interpolation";
    c.lhs = 1.0;
    c.rhs_without_constant = 2.0;
    c.observed_ratio = 0.5;
    c.seed = 42;
    const std::string line = c.to_json_line();
    CHECK(line.find("\"lemma23_besov_interpolation\"") != std::string::npos);
    CHECK(line.find("\"ratio\":0.5") != std::string::npos);
    CHECK(line.find("\"seed\":42") != std::string::npos);
}
