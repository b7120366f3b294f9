#include "pctx/descriptor.hpp"

#include <string>

#include "pctx/errors.hpp"

namespace pctx {

std::size_t descriptor_length(int n, int lambda) {
  const std::size_t l = static_cast<std::size_t>(lambda);
  return l * (l - 1) / 2 + static_cast<std::size_t>(n - lambda) * l;
}

Descriptor point_context(const Trajectory& traj, const ContextTable& table) {
  if (traj.n() != table.n) {
    throw SizeMismatchError("trajectory has " + std::to_string(traj.n()) +
                            " points but the context table expects " +
                            std::to_string(table.n));
  }
  const auto& pts = traj.points;
  const int n = table.n;
  const int lambda = table.lambda;

  Descriptor desc;
  desc.n = n;
  desc.lambda = lambda;
  desc.values.resize(static_cast<Eigen::Index>(descriptor_length(n, lambda)));

  Eigen::Index out = 0;
  for (int i = 1; i < lambda; ++i) {
    for (int j = 0; j < i; ++j) {
      desc.values[out++] = (pts[i] - pts[j]).norm();
    }
  }
  for (int m = lambda; m < n; ++m) {
    for (const int a : table.contexts_of(m)) {
      desc.values[out++] = (pts[m] - pts[a]).norm();
    }
  }
  return desc;
}

}  // namespace pctx
