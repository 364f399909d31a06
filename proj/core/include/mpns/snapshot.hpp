#pragma once

#include <string>

#include "mpns/field.hpp"

namespace mpns {

// Field snapshot file: 8-byte magic "MPFLD\0\0\1", a little-endian uint32
// length-prefixed UTF-8 JSON header {n, box_length, components, time}, then
// little-endian float64 samples in C order (x fastest), component-major.

/// Writes the state as a 6-component snapshot (u1 u2 u3 w1 w2 w3).
void write_state_snapshot(const std::string& path, const State& s);
State read_state_snapshot(const std::string& path);

/// Writes a 3-component snapshot of one vector field.
void write_field_snapshot(const std::string& path, const VectorField& v, double time);
VectorField read_field_snapshot(const std::string& path, double* time = nullptr);

}  // namespace mpns
