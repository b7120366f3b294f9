#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace pctx {

/// Shared lookup table assigning each point index i in (lambda..n] its
/// lambda context-point indices, all drawn from the points before i.
/// Shared across all trajectories of a sample set so descriptor
/// dimensions correspond.
///
/// Indices are 0-based in memory and 1-based in the CSV serialization.
struct ContextTable {
  int n = 0;
  int lambda = 0;
  // rows[r] holds the contexts of point i = lambda + r (0-based).
  std::vector<std::vector<int>> rows;

  /// Context indices of point i (0-based, i >= lambda).
  const std::vector<int>& contexts_of(int i) const { return rows[i - lambda]; }
};

/// For each point i > lambda (1-based), a uniformly random lambda-subset
/// of the preceding points, sampled without replacement. Each row depends
/// only on (seed, i), so tables with the same seed and growing lambda are
/// nested: the lambda1 row is a prefix of the lambda2 row.
ContextTable make_context_table(int n, int lambda, std::uint64_t seed);

/// CSV with header "i,j,m_ij", 1-based indices, rows in (i, j) order.
void write_context_table_csv(const std::filesystem::path& path,
                             const ContextTable& table);

/// Reads the CSV back; n and lambda are inferred from the rows (a
/// lambda == n table serializes to a bare header and reads back empty).
ContextTable read_context_table_csv(const std::filesystem::path& path);

}  // namespace pctx
