#pragma once

#include <cmath>
#include <numbers>

namespace mpns {

/// Uniform periodic grid on the torus [0, L)^3 with n points per axis.
///
/// The Fourier lattice carries integer modes m in {-n/2+1, ..., n/2} per
/// axis; physical wavevectors are k = (2*pi/L) * m.  The unpaired slot
/// |m| = n/2 is the Nyquist mode and is zeroed by every differentiation.
struct Grid {
    int n = 0;
    double box_length = 2.0 * std::numbers::pi;

    Grid() = default;
    Grid(int n_, double box_length_ = 2.0 * std::numbers::pi);

    long size() const { return static_cast<long>(n) * n * n; }
    double spacing() const { return box_length / n; }
    double cell_volume() const { return spacing() * spacing() * spacing(); }
    double volume() const { return box_length * box_length * box_length; }

    /// 2*pi/L, the wavevector of the lowest nonzero mode.
    double wave_scale() const { return 2.0 * std::numbers::pi / box_length; }

    /// Integer mode for storage index j in [0, n).
    int mode(int j) const { return j <= n / 2 ? j : j - n; }
    bool is_nyquist(int j) const { return j == n / 2; }

    /// Linear index with x fastest (C order over [z][y][x]).
    long index(int x, int y, int z) const {
        return (static_cast<long>(z) * n + y) * n + x;
    }

    bool operator==(const Grid&) const = default;
};

}  // namespace mpns
