#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <vector>

namespace pctx {

using Point3 = Eigen::Vector3d;
using PointSeq = std::vector<Point3>;

/// An ordered 3D point sequence as captured: arbitrary units, arbitrary
/// length N >= 2, not necessarily evenly sampled.
struct RawTrajectory {
  PointSeq points;

  std::size_t size() const { return points.size(); }

  /// Throws if fewer than two points or any coordinate is non-finite.
  void validate() const;

  /// Sum of segment lengths.
  double arc_length() const;
};

/// A comparison-ready sequence: exactly n points, centroid at the origin,
/// mean distance from the origin equal to 1.
struct Trajectory {
  PointSeq points;

  int n() const { return static_cast<int>(points.size()); }
};

struct PreprocessConfig {
  int point_count = 60;       // n
  int smooth_levels = 2;      // wavelet decomposition depth; 0 disables
  int smooth_zero_levels = 1; // finest detail bands hard-zeroed
};

/// n points evenly spaced by arc length along the input polyline.
/// Endpoints are preserved exactly. Zero-length segments (duplicate
/// consecutive points) contribute nothing to the parameterization.
PointSeq resample(const RawTrajectory& raw, int n);

/// Wavelet-smooths each coordinate channel independently.
PointSeq smooth(const PointSeq& points, const PreprocessConfig& cfg);

/// Centers on the centroid and scales so the mean point radius is 1.
PointSeq normalize(const PointSeq& points);

/// resample -> smooth -> normalize.
Trajectory preprocess(const RawTrajectory& raw, const PreprocessConfig& cfg = {});

/// Trajectory CSV: UTF-8, header "x,y,z", one row per point in temporal
/// order. The reader rejects rows with missing or non-numeric fields.
RawTrajectory read_trajectory_csv(const std::filesystem::path& path);
void write_trajectory_csv(const std::filesystem::path& path, const PointSeq& points);

}  // namespace pctx
