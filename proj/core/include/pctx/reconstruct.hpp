#pragma once

#include "pctx/descriptor.hpp"

namespace pctx {

/// Minimal root-mean-square misfit between two equal-length point sets
/// over all orthogonal transforms (rotations and reflections) and
/// translations. Zero iff the sets have the same shape.
double procrustes_residual(const PointSeq& a, const PointSeq& b);

/// Rebuilds a point set from its descriptor, incrementally: the first
/// point at the origin, the second on the x axis, the third in the xy
/// plane, the fourth above it (one of the two mirror images), and every
/// later point by least-squares trilateration over its context anchors.
/// The result has the same descriptor and, for consistent input, the
/// same shape as the originating set.
///
/// Throws DegenerateGeometryError when some point's anchors are
/// collinear or coplanar beyond the conditioning threshold, the case in
/// which the trilateration system is rank-deficient.
PointSeq reconstruct(const Descriptor& desc, const ContextTable& table);

}  // namespace pctx
