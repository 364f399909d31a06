#pragma once

#include "mpns/field.hpp"

namespace mpns {

/// d/dx_axis by multiplication with i*k_axis; axis is 1, 2 or 3.
/// Nyquist planes are zeroed.  Input must be spectral.
ScalarField partial(const ScalarField& f, int axis);
VectorField partial(const VectorField& v, int axis);

ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);

VectorField curl(const VectorField& v);
ScalarField divergence(const VectorField& v);
/// grad(div v) as one spectral operation: -k (k . v_hat).
VectorField grad_div(const VectorField& v);

/// Mode-wise projection v_hat -> v_hat - k (k.v_hat)/|k|^2 (k = 0 untouched).
VectorField leray_project(const VectorField& v);

/// Trapezoidal (equispaced) quadrature (L/n)^3 sum f*g; exact for
/// band-limited integrands.  Inputs must be real and share a grid.
double inner_l2(const ScalarField& f, const ScalarField& g);
double inner_l2(const VectorField& f, const VectorField& g);

/// Largest retained |m| per axis for a dealias fraction (2/3 rule by
/// default); chosen so that quadratic products of retained modes are
/// alias-free on the n-point grid.
int dealias_limit(int n, double fraction);

/// Zero all modes with any |m_axis| > limit (in place variant returns ref).
ScalarField truncate_modes(const ScalarField& f, int limit);
VectorField truncate_modes(const VectorField& v, int limit);

/// Largest |div u| mode magnitude relative to the field size; 0 for u = 0.
double relative_divergence(const VectorField& u);

bool has_non_finite(const ScalarField& f);
bool has_non_finite(const VectorField& v);

// Linear combinations used by time steppers; spectral representation.
ScalarField scaled_sum(const ScalarField& a, double ca, const ScalarField& b, double cb);
VectorField scaled_sum(const VectorField& a, double ca, const VectorField& b, double cb);

}  // namespace mpns
