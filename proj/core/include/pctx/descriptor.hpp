#pragma once

#include <Eigen/Core>

#include "pctx/context_table.hpp"
#include "pctx/trajectory.hpp"

namespace pctx {

/// Flat vector of Euclidean distances describing a point sequence:
/// all pairwise distances among the first lambda points, then for each
/// later point its distances to the lambda context points from the
/// shared table. Dimension ordering is fixed so features correspond
/// across samples: the pairwise block enumerates (i, j < i) with i
/// ascending, then each context block follows table column order.
struct Descriptor {
  Eigen::VectorXd values;
  int n = 0;
  int lambda = 0;
};

/// lambda*(lambda-1)/2 + (n-lambda)*lambda; equals n*(n-1)/2 at lambda == n.
std::size_t descriptor_length(int n, int lambda);

/// Computes the point-context descriptor of a preprocessed trajectory.
Descriptor point_context(const Trajectory& traj, const ContextTable& table);

}  // namespace pctx
