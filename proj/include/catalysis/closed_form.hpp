#pragma once

#include "catalysis/core_math.hpp"

#include <optional>

namespace catalysis {

/// [lo, hi] over the two-level catalyst parameter c, inclusive at both ends.
struct ClosedInterval {
  Rational lo;
  Rational hi;

  ClosedInterval(Rational lo_, Rational hi_);

  bool contains(const Rational& c) const { return lo <= c && c <= hi; }
  Rational midpoint() const { return catalysis::midpoint(lo, hi); }

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Outcome of the three prefix tests that any 4x4 pair with a 2x2 catalyst must pass:
///   a1 <= b1,  a1 + a2 > b1 + b2,  a1 + a2 + a3 <= b1 + b2 + b3.
struct NecessaryConditionReport {
  bool first_prefix_dominated = false;   // a1 <= b1
  bool second_prefix_exceeds = false;    // a1 + a2 > b1 + b2
  bool third_prefix_dominated = false;   // a1 + a2 + a3 <= b1 + b2 + b3
  bool holds = false;
  // b1 >= a1 >= a2 > b2 >= b3 > a3 >= a4 >= b4; implied whenever `holds`.
  bool interleaving_chain = false;
};

/// Throws WrongDimension unless both vectors have length 4 after zero-padding,
/// NotIncomparable unless compare() says Incomparable.
NecessaryConditionReport necessary_conditions_4x4(const SchmidtVector& psi1, const SchmidtVector& psi2);

/// Lower and upper bound expressions of the 4x4 / 2x2 criterion, before
/// intersecting with [1/2, 1]. Only meaningful when the necessary conditions hold.
struct IntervalBounds4x4 {
  Rational lower;
  Rational upper;
};

IntervalBounds4x4 interval_bounds_4x4(const SchmidtVector& psi1, const SchmidtVector& psi2);

/// Every c in the returned interval makes (c, 1 - c) a catalyst, and no other
/// c in [1/2, 1] does. Absent when no 2x2 catalyst exists.
std::optional<ClosedInterval> catalyst_interval_4x4(const SchmidtVector& psi1, const SchmidtVector& psi2);

}  // namespace catalysis
