#pragma once

#include "catalysis/closed_form.hpp"
#include "catalysis/core_math.hpp"
#include "catalysis/execution.hpp"

#include <optional>
#include <span>
#include <vector>

namespace catalysis {

/// Sorted, deduplicated values of c in [1/2, 1] where two products of a
/// state with (c, 1 - c) can swap order. Always starts at 1/2 and ends at 1.
struct BreakpointList {
  std::vector<Rational> values;
};

/// Disjoint, sorted closed intervals of catalyst parameters c.
struct FeasibleSet1D {
  std::vector<ClosedInterval> intervals;

  bool empty() const noexcept { return intervals.empty(); }
  friend bool operator==(const FeasibleSet1D&, const FeasibleSet1D&) = default;
};

/// Merges overlapping or touching intervals.
FeasibleSet1D merge_intervals(std::vector<ClosedInterval> intervals);

enum class Level { Major, Minor };  // factor c or factor 1 - c

/// One product psi_i * c or psi_i * (1 - c), kept symbolic.
struct ProductTerm {
  std::size_t state_index;
  Level level;

  friend auto operator<=>(const ProductTerm&, const ProductTerm&) = default;
};

using SymbolicOrder = std::vector<ProductTerm>;

/// constant + slope * x <= 0
struct AffineConstraint1D {
  Rational constant;
  Rational slope;
};

BreakpointList breakpoints(const SchmidtVector& psi1, const SchmidtVector& psi2);

/// Orders the 2n products of `psi` with (c0, 1 - c0). Products that are equal
/// as functions of c are ordered by (index, level); any other tie throws
/// TieAtSamplePoint.
SymbolicOrder fixed_order(const SchmidtVector& psi, const Rational& c0);

/// Prefix-sum constraints sum_{i<=l} a(x) - sum_{i<=l} b(x) <= 0 for l = 1..2n.
std::vector<AffineConstraint1D> prefix_constraints(const SymbolicOrder& order_a, const SymbolicOrder& order_b,
                                                   const SchmidtVector& psi1, const SchmidtVector& psi2);

/// Intersection of {x : constant + slope * x <= 0} over all constraints with `range`.
std::optional<ClosedInterval> solve_affine_1d(std::span<const AffineConstraint1D> constraints,
                                              const ClosedInterval& range);

std::optional<ClosedInterval> gap_feasibility(const SymbolicOrder& order_a, const SymbolicOrder& order_b,
                                              const ClosedInterval& gap, const SchmidtVector& psi1,
                                              const SchmidtVector& psi2);

struct SweepResult {
  FeasibleSet1D feasible;
  std::size_t breakpoint_count = 0;  // including both sentinels
  std::size_t gaps_solved = 0;
};

SweepResult sweep_k2(const SchmidtVector& psi1, const SchmidtVector& psi2,
                     Execution execution = Execution::Parallel);

/// All c in [1/2, 1] for which (c, 1 - c) catalyses psi1 -> psi2.
inline FeasibleSet1D find_catalysts_k2(const SchmidtVector& psi1, const SchmidtVector& psi2,
                                       Execution execution = Execution::Parallel) {
  return sweep_k2(psi1, psi2, execution).feasible;
}

}  // namespace catalysis
