#pragma once

#include "mpns/field.hpp"

namespace mpns {

/// Forward DFT: real samples -> coefficients with the 1/n^3 normalization.
/// Throws std::logic_error if the field is not in real representation.
ScalarField to_spectral(const ScalarField& f);

/// Inverse DFT: coefficients -> real samples (sum over modes, no scaling).
ScalarField to_real(const ScalarField& f);

ScalarField as_spectral(const ScalarField& f);  // pass-through if already spectral
ScalarField as_real(const ScalarField& f);

VectorField to_spectral(const VectorField& v);
VectorField to_real(const VectorField& v);
VectorField as_spectral(const VectorField& v);
VectorField as_real(const VectorField& v);

}  // namespace mpns
