#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <utility>

#include "pctx/trajectory.hpp"

namespace pctx {

/// A similarity pose change: p -> translation + scale * rotation * p.
struct RstParams {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  double scale = 1.0;
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
};

/// Uniformly random proper rotation (orthonormalized Gaussian triple with
/// the determinant fixed to +1), scale uniform in [lo, hi], translation
/// components uniform in [-range, range]. Deterministic in seed.
RstParams random_rst(std::uint64_t seed,
                     std::pair<double, double> scale_range = {0.5, 2.0},
                     double translation_range = 5.0);

Point3 apply_rst(const Point3& p, const RstParams& params);
RawTrajectory apply_rst(const RawTrajectory& raw, const RstParams& params);

}  // namespace pctx
