#pragma once

#include <string>

#include "mpns/field.hpp"

namespace mpns {

/// Sampling convention for the Morrey-Campanato sup: centers on a fixed
/// sub-lattice (every `center_stride`-th grid point per axis) and dyadic
/// radii L/2, L/4, ... down to `min_radius_cells` grid spacings, with the
/// wrap-around (torus) metric.
struct MorreyParams {
    int center_stride = 4;
    int min_radius_cells = 2;
};

/// ((L/n)^3 sum |f|^p)^{1/p}; max norm for p = infinity.  Real samples.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& f, double p);

/// Weak-L^p quasinorm: sup over the sample-value levels v > 0 of
/// v * measure{|f| >= v}^{1/p}, the exact discrete supremum.
double weak_lp_norm(const ScalarField& f, double p);
double weak_lp_norm(const VectorField& f, double p);

/// Homogeneous Sobolev norm (L^3 sum_{k!=0} |k|^{2r} |f_hat|^2)^{1/2},
/// 0 <= r < 3/2.  Spectral representation.
double sobolev_hdot_norm(const ScalarField& f, double r);
double sobolev_hdot_norm(const VectorField& f, double r);

/// Homogeneous Besov B^r_{2,1} norm with sharp-annulus Littlewood-Paley
/// blocks: sum_j 2^{jr} ||Delta_j f||_{L^2}, where Delta_j keeps modes with
/// 2^j <= |k| < 2^{j+1} on the scaled lattice (k = 0 excluded).  0 < r < 1.
double besov_b21r_norm(const ScalarField& f, double r);
double besov_b21r_norm(const VectorField& f, double r);

/// Morrey-Campanato norm sup_x sup_R R^{3/q-3/p} ||f||_{L^p(B(x,R))} over
/// the sampled centers and radii of MorreyParams; 1 < p <= q.
double morrey_norm(const ScalarField& f, double p, double q, const MorreyParams& mp = {});
double morrey_norm(const VectorField& f, double p, double q, const MorreyParams& mp = {});

/// Certified lower bound for the multiplier norm sup_{||g||_{Hdot^r}<=1}
/// ||fg||_{L^2}: maximum of ||fg||_2 / ||g||_{Hdot^r} over a trial family of
/// periodized Gaussians (dyadic widths, scattered centers) and single-mode
/// waves; `trials` scales the family size.
double xr_lower_bound(const ScalarField& f, double r, int trials);

/// Pointwise Euclidean magnitude of a real vector field.
ScalarField magnitude(const VectorField& v);

enum class NormKind { Lp, WeakLp, SobolevHdot, BesovB21r, MorreyM, XrLowerBound };

std::string norm_kind_name(NormKind k);

/// Named norm value with its parameters, serializable as one JSON line
/// {"kind":..., "params":{...}, "value":..., "grid":{...}}.
struct NormReport {
    NormKind kind = NormKind::Lp;
    std::vector<std::pair<std::string, double>> params;
    double value = 0.0;
    Grid grid;

    std::string to_json_line() const;
};

}  // namespace mpns
