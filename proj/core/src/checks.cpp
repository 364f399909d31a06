#include "mpns/checks.hpp"

#include <cmath>
#include <stdexcept>

#include "mpns/fft.hpp"
#include "mpns/operators.hpp"

namespace mpns {
namespace {

// strict: a vanishing rhs is always an error (degenerate input); otherwise
// zero lhs over zero rhs counts as ratio zero.
double ratio_or_throw(const std::string& name, double lhs, double rhs, bool strict = false) {
    if (rhs == 0.0) {
        if (!strict && lhs == 0.0) return 0.0;
        throw std::domain_error(name + ": zero rhs");
    }
    return lhs / rhs;
}

void require_zero_mean(const ScalarField& spectral, const char* what) {
    auto m = spectral.modes();
    double scale = 0.0;
    for (const Complex& c : m) scale = std::max(scale, std::abs(c));
    if (std::abs(m[0]) > 1e-10 * std::max(scale, 1e-300))
        throw std::invalid_argument(std::string(what) + ": zero-mean precondition violated");
}

}  // namespace

InequalityCheck check_lemma23(const ScalarField& f, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("check_lemma23: r must be in (0,1)");
    const ScalarField fs = as_spectral(f);
    const ScalarField fr = as_real(f);
    const double l2 = lp_norm(fr, 2.0);
    const double grad = sobolev_hdot_norm(fs, 1.0);
    const double lhs = besov_b21r_norm(fs, r);
    const double rhs = std::pow(l2, 1.0 - r) * std::pow(grad, r);
    InequalityCheck c;
    c.name = "lemma23_besov_interpolation";
    c.lhs = lhs;
    c.rhs_without_constant = rhs;
    c.observed_ratio = ratio_or_throw(c.name, lhs, rhs, /*strict=*/true);
    return c;
}

InequalityCheck check_bilinear(const ScalarField& f, const ScalarField& g, double r,
                               const MorreyParams& mp) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("check_bilinear: r must be in (0,1)");
    if (!(f.grid() == g.grid())) throw std::invalid_argument("check_bilinear: grid mismatch");
    const int limit = dealias_limit(f.grid().n, 2.0 / 3.0);
    const ScalarField fs = truncate_modes(as_spectral(f), limit);
    const ScalarField gs = truncate_modes(as_spectral(g), limit);
    const ScalarField frr = to_real(fs);
    const ScalarField grr = to_real(gs);
    auto a = frr.samples();
    auto b = grr.samples();
    std::vector<double> prod(a.size());
    for (size_t i = 0; i < a.size(); ++i) prod[i] = a[i] * b[i];
    const double lhs = lp_norm(ScalarField::from_samples(f.grid(), std::move(prod)), 2.0);
    const double rhs = morrey_norm(frr, 2.0, 3.0 / r, mp) * besov_b21r_norm(gs, r);
    InequalityCheck c;
    c.name = "bilinear_morrey_besov";
    c.lhs = lhs;
    c.rhs_without_constant = rhs;
    c.observed_ratio = ratio_or_throw(c.name, lhs, rhs);
    return c;
}

InequalityCheck check_anisotropic_gn(const ScalarField& f, double alpha, double lambda,
                                     double gamma) {
    if (!(alpha >= 1.0 && std::isfinite(alpha)) || !(lambda >= 1.0 && std::isfinite(lambda)))
        throw std::invalid_argument("check_anisotropic_gn: need 1 <= alpha, lambda < inf");
    if (!(1.0 / lambda + 2.0 / alpha > 1.0))
        throw std::invalid_argument("check_anisotropic_gn: need 1/lambda + 2/alpha > 1");
    if (!(gamma >= 1.0) || std::abs(1.0 + 3.0 / gamma - 1.0 / lambda - 2.0 / alpha) > 1e-12)
        throw std::invalid_argument(
            "check_anisotropic_gn: exponent relation 1 + 3/gamma = 1/lambda + 2/alpha violated");
    const ScalarField fs = as_spectral(f);
    require_zero_mean(fs, "check_anisotropic_gn");
    const double lhs = lp_norm(as_real(f), gamma);
    const double d1 = lp_norm(to_real(partial(fs, 1)), alpha);
    const double d2 = lp_norm(to_real(partial(fs, 2)), alpha);
    const double d3 = lp_norm(to_real(partial(fs, 3)), lambda);
    const double rhs = std::cbrt(d1 * d2 * d3);
    InequalityCheck c;
    c.name = "anisotropic_gagliardo_nirenberg";
    c.lhs = lhs;
    c.rhs_without_constant = rhs;
    c.observed_ratio = ratio_or_throw(c.name, lhs, rhs, /*strict=*/true);
    return c;
}

InequalityCheck check_lemma25(const ScalarField& f, double beta) {
    if (!(beta >= 2.0 && beta <= 6.0))
        throw std::invalid_argument("check_lemma25: beta must be in [2, 6]");
    const ScalarField fs = as_spectral(f);
    require_zero_mean(fs, "check_lemma25");
    const ScalarField fr = as_real(f);
    const double e0 = (6.0 - beta) / (2.0 * beta);
    const double e1 = (beta - 2.0) / (2.0 * beta);
    const double lhs = lp_norm(fr, beta);
    const double l2 = lp_norm(fr, 2.0);
    const double d1 = lp_norm(to_real(partial(fs, 1)), 2.0);
    const double d2 = lp_norm(to_real(partial(fs, 2)), 2.0);
    const double d3 = lp_norm(to_real(partial(fs, 3)), 2.0);
    const double rhs =
        std::pow(l2, e0) * std::pow(d1, e1) * std::pow(d2, e1) * std::pow(d3, e1);
    InequalityCheck c;
    c.name = "lemma25_four_factor";
    c.lhs = lhs;
    c.rhs_without_constant = rhs;
    c.observed_ratio = ratio_or_throw(c.name, lhs, rhs, /*strict=*/true);
    return c;
}

std::vector<InequalityCheck> check_embedding_chain(const ScalarField& f, double r, double p,
                                                   const MorreyParams& mp) {
    if (!(r > 0.0 && r < 1.5))
        throw std::invalid_argument("check_embedding_chain: r must be in (0, 3/2)");
    if (!(p >= 2.0 && p <= 3.0 / r))
        throw std::invalid_argument("check_embedding_chain: need 2 <= p <= 3/r");
    const ScalarField fr = as_real(f);
    const double strong = lp_norm(fr, 3.0 / r);
    if (strong == 0.0) return {};  // zero field: chain trivially degenerate
    const double weak = weak_lp_norm(fr, 3.0 / r);
    const double morrey = morrey_norm(fr, p, 3.0 / r, mp);
    InequalityCheck a;
    a.name = "embed_weak_l3r_in_l3r";
    a.lhs = weak;
    a.rhs_without_constant = strong;
    a.observed_ratio = weak / strong;
    InequalityCheck b;
    b.name = "embed_morrey_in_weak_l3r";
    b.lhs = morrey;
    b.rhs_without_constant = weak;
    b.observed_ratio = morrey / weak;
    return {a, b};
}

}  // namespace mpns
