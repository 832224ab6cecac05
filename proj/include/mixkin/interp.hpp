#pragma once

#include "mixkin/geometry.hpp"
#include "mixkin/grid.hpp"

namespace mixkin {

enum class InterpScheme { linear8, quad10 };

// quad10 is the default scheme: a 10-node second-difference stencil centered
// on the nearest node. It reproduces every quadratic polynomial exactly, at
// any evaluation point, including clamped stencils at the box boundary. That
// exactness is what keeps the discrete collision invariants (species numbers,
// momentum, kinetic energy) in the kernel of the discretized operators up to
// box-truncation level. linear8 is plain trilinear interpolation on the
// enclosing cell, kept for refinement studies.

inline constexpr int kMaxStencil = 10;

/// Interpolation stencil: absolute linear node indices plus weights.
/// count == 0 encodes "point outside the box" (zero extension).
struct Stencil {
  int count = 0;
  int idx[kMaxStencil];
  double w[kMaxStencil];
};

/// Build the stencil for evaluation point p. Returns false (count 0) when p
/// lies outside [-R, R]^3.
bool make_stencil(const VelocityGrid& grid, InterpScheme scheme, Vec3 p, Stencil& out);

/// Evaluate a nodal field at p (zero outside the box).
double interpolate(const VelocityGrid& grid, InterpScheme scheme, const double* field, Vec3 p);

}  // namespace mixkin
