#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "mpns/field.hpp"

namespace mpns {

enum class GeneratorKind { TaylorGreen, RandomDivFree, SingleMode, SnapshotFile };

GeneratorKind generator_kind_from_name(const std::string& name);
std::string generator_kind_name(GeneratorKind k);

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::TaylorGreen;
    double amplitude = 1.0;
    double slope = 2.0;               // RandomDivFree: |k|^{-slope} envelope
    std::array<int, 3> mode{0, 0, 1}; // SingleMode wavevector
    double omega_amplitude = 0.0;
    std::string snapshot_path;        // SnapshotFile
};

/// Initial state at t = 0: u divergence-free, spectral representation,
/// deterministic for a fixed seed.
State generate_initial(const GeneratorSpec& spec, const Grid& grid, uint64_t seed);

/// Zero-mean scalar field with Gaussian coefficients under a |k|^{-slope}
/// envelope, band-limited to |m| <= kmax per axis, normalized to unit L^2.
ScalarField random_band_limited_scalar(const Grid& grid, uint64_t seed, double slope,
                                       int kmax);

/// Same construction per component; Leray-projected when `project` is set.
/// Normalized so the L^2 norm equals `amplitude` (zero field for 0).
VectorField random_vector_field(const Grid& grid, uint64_t seed, double slope, int kmax,
                                bool project, double amplitude);

}  // namespace mpns
