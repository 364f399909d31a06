#include "mpns/field.hpp"

#include <stdexcept>

namespace mpns {

Grid::Grid(int n_, double box_length_) : n(n_), box_length(box_length_) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("Grid: n must be even and >= 4");
    if (!(box_length > 0.0))
        throw std::invalid_argument("Grid: box_length must be positive");
}

ScalarField ScalarField::real_zeros(const Grid& g) {
    return from_samples(g, std::vector<double>(static_cast<size_t>(g.size()), 0.0));
}

ScalarField ScalarField::spectral_zeros(const Grid& g) {
    return from_modes(g, std::vector<Complex>(static_cast<size_t>(g.size()), Complex{}));
}

ScalarField ScalarField::from_samples(const Grid& g, std::vector<double> samples) {
    if (std::ssize(samples) != g.size())
        throw std::invalid_argument("ScalarField: sample count does not match grid");
    ScalarField f;
    f.grid_ = g;
    f.rep_ = Rep::Real;
    f.real_ = std::move(samples);
    return f;
}

ScalarField ScalarField::from_modes(const Grid& g, std::vector<Complex> modes) {
    if (std::ssize(modes) != g.size())
        throw std::invalid_argument("ScalarField: mode count does not match grid");
    ScalarField f;
    f.grid_ = g;
    f.rep_ = Rep::Spectral;
    f.spec_ = std::move(modes);
    return f;
}

std::span<const double> ScalarField::samples() const {
    if (rep_ != Rep::Real)
        throw std::logic_error("ScalarField: expected real representation");
    return real_;
}

std::span<double> ScalarField::samples() {
    if (rep_ != Rep::Real)
        throw std::logic_error("ScalarField: expected real representation");
    return real_;
}

std::span<const Complex> ScalarField::modes() const {
    if (rep_ != Rep::Spectral)
        throw std::logic_error("ScalarField: expected spectral representation");
    return spec_;
}

std::span<Complex> ScalarField::modes() {
    if (rep_ != Rep::Spectral)
        throw std::logic_error("ScalarField: expected spectral representation");
    return spec_;
}

VectorField::VectorField(std::array<ScalarField, 3> c) : comp(std::move(c)) {
    if (!(comp[0].grid() == comp[1].grid() && comp[0].grid() == comp[2].grid()))
        throw std::invalid_argument("VectorField: components must share one grid");
    if (comp[0].rep() != comp[1].rep() || comp[0].rep() != comp[2].rep())
        throw std::invalid_argument("VectorField: components must share one representation");
}

VectorField VectorField::real_zeros(const Grid& g) {
    return VectorField{{ScalarField::real_zeros(g), ScalarField::real_zeros(g),
                        ScalarField::real_zeros(g)}};
}

VectorField VectorField::spectral_zeros(const Grid& g) {
    return VectorField{{ScalarField::spectral_zeros(g), ScalarField::spectral_zeros(g),
                        ScalarField::spectral_zeros(g)}};
}

}  // namespace mpns
