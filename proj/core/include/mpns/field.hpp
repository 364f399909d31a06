#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "mpns/grid.hpp"

namespace mpns {

using Complex = std::complex<double>;

enum class Rep { Real, Spectral };

/// Scalar field on a periodic grid, stored either as n^3 real samples or as
/// n^3 complex Fourier coefficients (conjugate-symmetric for real data).
///
/// The spectral normalization puts 1/n^3 on the forward transform, so the
/// coefficient of mode k is (1/n^3) sum_x f(x) e^{-ik.x} and coefficients
/// are grid-independent.
class ScalarField {
  public:
    ScalarField() = default;

    static ScalarField real_zeros(const Grid& g);
    static ScalarField spectral_zeros(const Grid& g);
    static ScalarField from_samples(const Grid& g, std::vector<double> samples);
    static ScalarField from_modes(const Grid& g, std::vector<Complex> modes);

    const Grid& grid() const { return grid_; }
    Rep rep() const { return rep_; }
    bool is_real() const { return rep_ == Rep::Real; }
    bool is_spectral() const { return rep_ == Rep::Spectral; }

    /// Sample access; throws std::logic_error on representation mismatch.
    std::span<const double> samples() const;
    std::span<double> samples();
    std::span<const Complex> modes() const;
    std::span<Complex> modes();

    double sample(int x, int y, int z) const { return samples()[grid_.index(x, y, z)]; }
    Complex mode(int jx, int jy, int jz) const { return modes()[grid_.index(jx, jy, jz)]; }

  private:
    Grid grid_;
    Rep rep_ = Rep::Real;
    std::vector<double> real_;
    std::vector<Complex> spec_;
};

/// Three scalar components on one shared grid.
struct VectorField {
    std::array<ScalarField, 3> comp;

    VectorField() = default;
    explicit VectorField(std::array<ScalarField, 3> c);

    static VectorField real_zeros(const Grid& g);
    static VectorField spectral_zeros(const Grid& g);

    const Grid& grid() const { return comp[0].grid(); }
    Rep rep() const { return comp[0].rep(); }
    const ScalarField& operator[](int i) const { return comp[i]; }
    ScalarField& operator[](int i) { return comp[i]; }
};

/// Velocity / micro-rotation pair at one time.
struct State {
    VectorField u;
    VectorField w;
    double t = 0.0;
};

/// Evaluate fn(x, y, z) at the grid points (physical coordinates).
template <typename F>
ScalarField sample_field(const Grid& g, F&& fn) {
    std::vector<double> v(static_cast<size_t>(g.size()));
    const double h = g.spacing();
    for (int z = 0; z < g.n; ++z)
        for (int y = 0; y < g.n; ++y)
            for (int x = 0; x < g.n; ++x)
                v[g.index(x, y, z)] = fn(x * h, y * h, z * h);
    return ScalarField::from_samples(g, std::move(v));
}

template <typename F1, typename F2, typename F3>
VectorField sample_vector_field(const Grid& g, F1&& f1, F2&& f2, F3&& f3) {
    return VectorField{{sample_field(g, std::forward<F1>(f1)),
                        sample_field(g, std::forward<F2>(f2)),
                        sample_field(g, std::forward<F3>(f3))}};
}

}  // namespace mpns
