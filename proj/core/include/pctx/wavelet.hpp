#pragma once

#include <vector>

namespace pctx::wavelet {

/// One decomposition of a signal into a coarse approximation plus detail
/// bands. details[0] is the finest band.
struct Db4Pyramid {
  std::vector<double> approx;
  std::vector<std::vector<double>> details;
};

/// Number of levels actually reachable for a signal of length `size`:
/// the periodized transform needs an even length >= 4 at every level.
int max_levels(std::size_t size, int requested);

/// Forward periodized Daubechies 4-tap transform. Levels beyond
/// max_levels(x.size(), levels) are silently dropped.
Db4Pyramid forward(const std::vector<double>& x, int levels);

/// Exact inverse of forward().
std::vector<double> inverse(const Db4Pyramid& pyramid);

/// Decompose `levels` deep, hard-zero the `zero_levels` finest detail
/// bands, reconstruct. levels == 0 is the identity.
std::vector<double> smooth_channel(const std::vector<double>& x, int levels,
                                   int zero_levels);

}  // namespace pctx::wavelet
