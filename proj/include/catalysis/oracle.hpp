#pragma once

#include "catalysis/core_math.hpp"
#include "catalysis/execution.hpp"

#include <optional>
#include <vector>

namespace catalysis {

/// Grid of catalysts (m_1/d, ..., m_k/d) with m_1 >= ... >= m_k >= 0 and sum m_i = d.
struct GridSpec {
  std::size_t k = 2;
  std::size_t denominator = 1000;
};

/// Integer compositions (m_1, ..., m_k) of the grid, in lexicographically
/// decreasing order, so (d, 0, ..., 0) comes first.
std::vector<std::vector<std::size_t>> grid_points(const GridSpec& spec);

/// Exhaustive search over the grid; returns the first point in grid_points()
/// order that verifies as a catalyst. A miss is evidence, not proof.
std::optional<CatalystCandidate> grid_search(const SchmidtVector& psi1, const SchmidtVector& psi2,
                                             const GridSpec& spec, Execution execution = Execution::Parallel);

}  // namespace catalysis
