#include "pctx/trajectory.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "pctx/errors.hpp"
#include "pctx/wavelet.hpp"

namespace pctx {

void RawTrajectory::validate() const {
  if (points.size() < 2) {
    throw std::invalid_argument("trajectory needs at least 2 points");
  }
  for (const auto& p : points) {
    if (!p.allFinite()) {
      throw std::invalid_argument("trajectory contains non-finite coordinates");
    }
  }
}

double RawTrajectory::arc_length() const {
  double total = 0.0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    total += (points[k] - points[k - 1]).norm();
  }
  return total;
}

PointSeq resample(const RawTrajectory& raw, int n) {
  raw.validate();
  if (n < 2) throw std::invalid_argument("resample needs n >= 2");

  const PointSeq& in = raw.points;
  std::vector<double> cum(in.size(), 0.0);
  for (std::size_t k = 1; k < in.size(); ++k) {
    cum[k] = cum[k - 1] + (in[k] - in[k - 1]).norm();
  }
  const double total = cum.back();
  if (total <= 0.0) {
    throw ZeroLengthError("all input points coincide; polyline has zero length");
  }

  PointSeq out(n);
  out.front() = in.front();
  out.back() = in.back();
  std::size_t seg = 0;
  for (int i = 1; i + 1 < n; ++i) {
    const double target = total * static_cast<double>(i) / (n - 1);
    // Advance past segments ending at or before target; zero-length
    // segments are skipped here, so the landing segment has positive length.
    while (seg + 2 < in.size() && cum[seg + 1] <= target) ++seg;
    const double len = cum[seg + 1] - cum[seg];
    const double alpha = len > 0.0 ? (target - cum[seg]) / len : 0.0;
    out[i] = in[seg] + alpha * (in[seg + 1] - in[seg]);
  }
  return out;
}

PointSeq smooth(const PointSeq& points, const PreprocessConfig& cfg) {
  if (cfg.smooth_levels <= 0 || points.empty()) return points;
  const std::size_t n = points.size();
  PointSeq out(n);
  std::vector<double> channel(n);
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < n; ++i) channel[i] = points[i][axis];
    const std::vector<double> smoothed = wavelet::smooth_channel(
        channel, cfg.smooth_levels, cfg.smooth_zero_levels);
    for (std::size_t i = 0; i < n; ++i) out[i][axis] = smoothed[i];
  }
  return out;
}

PointSeq normalize(const PointSeq& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("normalize needs at least 2 points");
  }
  Point3 centroid = Point3::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());

  double mean_radius = 0.0;
  for (const auto& p : points) mean_radius += (p - centroid).norm();
  mean_radius /= static_cast<double>(points.size());

  if (mean_radius <= 1e-13 * (1.0 + centroid.norm())) {
    throw DegenerateTrajectoryError("all points coincide; scale is undefined");
  }

  PointSeq out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = (points[i] - centroid) / mean_radius;
  }
  return out;
}

Trajectory preprocess(const RawTrajectory& raw, const PreprocessConfig& cfg) {
  if (cfg.point_count < 5) {
    throw std::invalid_argument("preprocess needs point_count >= 5");
  }
  PointSeq pts = resample(raw, cfg.point_count);
  pts = smooth(pts, cfg);
  pts = normalize(pts);
  return Trajectory{std::move(pts)};
}

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bool parse_field(const std::string& field, double& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

RawTrajectory read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MissingFileError("cannot open trajectory file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "x,y,z") {
    throw ParseError(path.string() + ": expected header \"x,y,z\"");
  }
  RawTrajectory raw;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    Point3 p;
    std::size_t start = 0;
    int field = 0;
    for (; field < 3; ++field) {
      const std::size_t comma = line.find(',', start);
      const bool last_field = (field == 2);
      if (last_field != (comma == std::string::npos)) break;
      const std::string token =
          line.substr(start, last_field ? std::string::npos : comma - start);
      if (!parse_field(token, p[field])) break;
      start = comma + 1;
    }
    if (field != 3) {
      throw ParseError(path.string() + ": row " + std::to_string(row) +
                       ": expected three numeric fields");
    }
    raw.points.push_back(p);
  }
  return raw;
}

void write_trajectory_csv(const std::filesystem::path& path, const PointSeq& points) {
  std::ofstream out(path);
  if (!out) {
    throw MissingFileError("cannot write trajectory file: " + path.string());
  }
  out << "x,y,z\n";
  for (const auto& p : points) {
    out << format_double(p.x()) << ',' << format_double(p.y()) << ','
        << format_double(p.z()) << '\n';
  }
}

}  // namespace pctx
