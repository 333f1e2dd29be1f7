#pragma once

#include "catalysis/core_math.hpp"
#include "catalysis/execution.hpp"
#include "catalysis/sweep_k2.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace catalysis {

/// Largest catalyst dimension handled by exact elimination (k - 1 <= 3 free variables).
inline constexpr std::size_t kMaxCatalystDimension = 4;

enum class PlaneKind { Product, Ordering, Boundary };

/// Homogeneous plane sum_j coefficients[j] * x_j = 0 over catalyst coordinates,
/// scaled so that the first nonzero coefficient is 1.
struct Hyperplane {
  std::vector<Rational> coefficients;
  PlaneKind kind;
};

struct HyperplaneSet {
  std::size_t k = 0;
  std::vector<Hyperplane> planes;
  /// Product planes emitted before deduplication (2 * C(k,2) * C(n,2) unless
  /// some pair of coefficients is entirely zero).
  std::size_t product_planes_generated = 0;
  /// Distinct product planes that survived deduplication.
  std::size_t product_planes = 0;
};

HyperplaneSet build_hyperplanes(const SchmidtVector& psi1, const SchmidtVector& psi2, std::size_t k);

using SignVector = std::vector<std::int8_t>;

/// An exact point strictly inside one cell of the arrangement, inside the
/// ordered simplex x_1 > ... > x_k > 0, together with its sign vector against
/// every plane of the set.
struct CellRepresentative {
  std::vector<Rational> point;
  SignVector signature;
};

SignVector sign_vector(const HyperplaneSet& planes, std::span<const Rational> point);

/// At least one representative per full-dimensional cell, deduplicated by
/// signature. Throws DegenerateSimplex for k < 2.
std::vector<CellRepresentative> cell_representatives(const HyperplaneSet& planes,
                                                     Execution execution = Execution::Parallel);

enum class ConstraintOrigin { MajorizationPrefix, OrderingA, OrderingB, SimplexBound };

/// coefficients . y + constant <= 0 over the free variables y = (x_1, ..., x_{k-1}).
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational constant;
  ConstraintOrigin origin = ConstraintOrigin::MajorizationPrefix;
  std::size_t index = 0;  // prefix length l, ordering position, or bound index
};

struct LinearSystem {
  std::size_t variables = 0;
  std::vector<LinearConstraint> constraints;
};

/// Inequalities that hold exactly on the closure of the cell containing `rep`:
/// n*k majorization prefixes, the ordering of both spectra, and the simplex bounds.
/// Throws TieAtRepresentative when `rep` lies on a plane.
LinearSystem cell_system(const CellRepresentative& rep, const SchmidtVector& psi1, const SchmidtVector& psi2);

struct FeasiblePoint {
  std::vector<Rational> point;        // free variables
  std::optional<Rational> first_lo;   // projection of the feasible set onto y_1
  std::optional<Rational> first_hi;
};

/// Fourier-Motzkin elimination; the witness takes the smallest feasible value
/// of each variable in turn. Absent when the system is infeasible.
std::optional<FeasiblePoint> solve_feasibility(const LinearSystem& system);

enum class CatalystVerdict { AlreadyTransformable, Equivalent, ReverseOnly, Exists, NotExists };

const char* to_string(CatalystVerdict verdict);

struct CatalystWitness {
  SignVector cell_signature;
  CatalystCandidate catalyst;
  /// For k = 2 the full set of feasible c inside this cell.
  std::optional<ClosedInterval> interval;
  /// x_k = 0: the catalyst effectively has fewer Schmidt coefficients.
  bool lower_dimensional = false;
};

struct SearchStats {
  std::size_t hyperplanes = 0;
  std::size_t cells_enumerated = 0;
  std::size_t systems_solved = 0;
  std::size_t lower_dimensional_witnesses = 0;

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct CatalystResult {
  CatalystVerdict verdict = CatalystVerdict::NotExists;
  std::vector<CatalystWitness> witnesses;
  SearchStats stats;
};

/// Decides whether a k x k catalyst exists and returns one verified witness per
/// feasible cell. Throws UnsupportedK outside 2 <= k <= kMaxCatalystDimension.
CatalystResult find_catalysts(const SchmidtVector& psi1, const SchmidtVector& psi2, std::size_t k,
                              Execution execution = Execution::Parallel);

/// Union of the per-cell intervals of a k = 2 result.
FeasibleSet1D feasible_union_k2(const CatalystResult& result);

}  // namespace catalysis
