#include "pctx/rst.hpp"

#include <stdexcept>

#include "pctx/rng.hpp"

namespace pctx {

RstParams random_rst(std::uint64_t seed, std::pair<double, double> scale_range,
                     double translation_range) {
  const auto [lo, hi] = scale_range;
  if (!(0.0 < lo && lo <= hi)) {
    throw std::invalid_argument("scale range must satisfy 0 < lo <= hi");
  }
  Rng rng(seed);

  // Gram-Schmidt on a Gaussian triple; redraw in the measure-zero case of
  // near-dependent columns.
  Eigen::Matrix3d rot;
  while (true) {
    Eigen::Matrix3d g;
    for (int c = 0; c < 3; ++c) {
      for (int r = 0; r < 3; ++r) g(r, c) = rng.normal();
    }
    Eigen::Vector3d u0 = g.col(0);
    if (u0.norm() < 1e-12) continue;
    u0.normalize();
    Eigen::Vector3d u1 = g.col(1) - u0.dot(g.col(1)) * u0;
    if (u1.norm() < 1e-12) continue;
    u1.normalize();
    Eigen::Vector3d u2 = g.col(2) - u0.dot(g.col(2)) * u0 - u1.dot(g.col(2)) * u1;
    if (u2.norm() < 1e-12) continue;
    u2.normalize();
    rot.col(0) = u0;
    rot.col(1) = u1;
    rot.col(2) = u2;
    break;
  }
  if (rot.determinant() < 0.0) rot.col(2) = -rot.col(2);

  RstParams params;
  params.rotation = rot;
  params.scale = rng.uniform(lo, hi);
  for (int i = 0; i < 3; ++i) {
    params.translation[i] = rng.uniform(-translation_range, translation_range);
  }
  return params;
}

Point3 apply_rst(const Point3& p, const RstParams& params) {
  return params.translation + params.scale * (params.rotation * p);
}

RawTrajectory apply_rst(const RawTrajectory& raw, const RstParams& params) {
  RawTrajectory out;
  out.points.reserve(raw.points.size());
  for (const auto& p : raw.points) out.points.push_back(apply_rst(p, params));
  return out;
}

}  // namespace pctx
