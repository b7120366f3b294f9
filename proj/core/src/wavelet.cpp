#include "pctx/wavelet.hpp"

#include <cmath>

namespace pctx::wavelet {
namespace {

struct Db4Filters {
  double h[4];  // scaling (low-pass)
  double g[4];  // wavelet (high-pass), g[j] = (-1)^j h[3-j]
  Db4Filters() {
    const double s3 = std::sqrt(3.0);
    const double norm = 4.0 * std::sqrt(2.0);
    h[0] = (1.0 + s3) / norm;
    h[1] = (3.0 + s3) / norm;
    h[2] = (3.0 - s3) / norm;
    h[3] = (1.0 - s3) / norm;
    g[0] = h[3];
    g[1] = -h[2];
    g[2] = h[1];
    g[3] = -h[0];
  }
};

const Db4Filters& filters() {
  static const Db4Filters f;
  return f;
}

void analysis_step(const std::vector<double>& x, std::vector<double>& approx,
                   std::vector<double>& detail) {
  const auto& f = filters();
  const std::size_t n = x.size();
  const std::size_t half = n / 2;
  approx.assign(half, 0.0);
  detail.assign(half, 0.0);
  for (std::size_t k = 0; k < half; ++k) {
    double a = 0.0;
    double d = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      const double v = x[(2 * k + j) % n];
      a += f.h[j] * v;
      d += f.g[j] * v;
    }
    approx[k] = a;
    detail[k] = d;
  }
}

std::vector<double> synthesis_step(const std::vector<double>& approx,
                                   const std::vector<double>& detail) {
  const auto& f = filters();
  const std::size_t half = approx.size();
  const std::size_t n = 2 * half;
  std::vector<double> x(n, 0.0);
  for (std::size_t k = 0; k < half; ++k) {
    for (std::size_t j = 0; j < 4; ++j) {
      x[(2 * k + j) % n] += approx[k] * f.h[j] + detail[k] * f.g[j];
    }
  }
  return x;
}

}  // namespace

int max_levels(std::size_t size, int requested) {
  int levels = 0;
  std::size_t len = size;
  while (levels < requested && len % 2 == 0 && len >= 4) {
    len /= 2;
    ++levels;
  }
  return levels;
}

Db4Pyramid forward(const std::vector<double>& x, int levels) {
  Db4Pyramid pyramid;
  pyramid.approx = x;
  const int depth = max_levels(x.size(), levels);
  for (int lv = 0; lv < depth; ++lv) {
    std::vector<double> approx;
    std::vector<double> detail;
    analysis_step(pyramid.approx, approx, detail);
    pyramid.approx = std::move(approx);
    pyramid.details.push_back(std::move(detail));
  }
  return pyramid;
}

std::vector<double> inverse(const Db4Pyramid& pyramid) {
  std::vector<double> x = pyramid.approx;
  for (auto it = pyramid.details.rbegin(); it != pyramid.details.rend(); ++it) {
    x = synthesis_step(x, *it);
  }
  return x;
}

std::vector<double> smooth_channel(const std::vector<double>& x, int levels,
                                   int zero_levels) {
  if (levels <= 0) return x;
  Db4Pyramid pyramid = forward(x, levels);
  const int zeroed =
      std::min<int>(zero_levels, static_cast<int>(pyramid.details.size()));
  for (int lv = 0; lv < zeroed; ++lv) {
    std::fill(pyramid.details[lv].begin(), pyramid.details[lv].end(), 0.0);
  }
  return inverse(pyramid);
}

}  // namespace pctx::wavelet
