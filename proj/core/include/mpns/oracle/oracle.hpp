#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

// Brute-force reference implementations used to mint expected values for the
// fast paths.  Everything here works on raw arrays and shares no code with
// the main library; sizes are capped because costs are O(n^6).
namespace mpns::oracle {

using Complex = std::complex<double>;

/// Direct double-loop DFT, coefficient of mode k = (1/n^3) sum f(x) e^{-ik.x}.
/// Layout: index (z*n + y)*n + x, integer mode m(j) = j <= n/2 ? j : j - n.
/// Requires n <= 16.
std::vector<Complex> naive_dft(const std::vector<double>& samples, int n);

/// Inverse of naive_dft (plain mode sum, no scaling).  Requires n <= 16.
std::vector<double> naive_idft(const std::vector<Complex>& modes, int n);

/// True (non-wrapped) convolution of coefficient arrays on the integer
/// lattice: out(k) = sum_{k1 + k2 = k} f(k1) g(k2), both factors and the sum
/// restricted to modes representable on the n-grid.  Requires n <= 16.
std::vector<Complex> direct_convolution(const std::vector<Complex>& fhat,
                                        const std::vector<Complex>& ghat, int n);

/// (integral over the torus ball B(center, radius) of |f|^p)^(1/p), by sample
/// counting at cell measure (L/n)^3 with the wrap-around metric.
/// center is a grid index triple (x, y, z).
double direct_ball_integral(const std::vector<double>& samples, int n, double box_length,
                            std::array<int, 3> center, double radius, double p);

/// sup over `levels` uniformly spaced thresholds R in (0, max|f|] of
/// R * measure{|f| > R}^(1/p); measure by sample counting.
double dense_level_sweep(const std::vector<double>& samples, int n, double box_length,
                         double p, int levels);

/// Linearization of the coupled (u, w) system at a single Fourier mode k
/// (physical wavevector), pressure eliminated: a 6x6 complex matrix acting on
/// stacked (u_hat, w_hat).
struct LinearModeSystem {
    std::array<double, 3> k{};
    std::array<std::array<Complex, 6>, 6> matrix{};
};

LinearModeSystem make_linear_mode_system(const std::array<double, 3>& k);

/// e^{t M} by scaling-and-squaring with a fixed-order Pade approximant.
std::array<std::array<Complex, 6>, 6> matrix_exponential(const LinearModeSystem& sys,
                                                         double t);

std::array<Complex, 6> apply_matrix(const std::array<std::array<Complex, 6>, 6>& m,
                                    const std::array<Complex, 6>& x);

}  // namespace mpns::oracle
