#include "catalysis/closed_form.hpp"

#include "catalysis/errors.hpp"

#include <algorithm>

namespace catalysis {

ClosedInterval::ClosedInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo.canonicalize();
  hi.canonicalize();
  if (lo > hi) throw CatalysisError(ErrorKind::Internal, "interval with lo > hi");
  if (lo < Rational(1, 2) || hi > 1) throw CatalysisError(ErrorKind::Internal, "interval outside [1/2, 1]");
}

namespace {

std::pair<SchmidtVector, SchmidtVector> checked_pair(const SchmidtVector& psi1, const SchmidtVector& psi2) {
  auto padded = pad_to_common_length(psi1, psi2);
  if (padded.first.size() != 4) {
    throw CatalysisError(ErrorKind::WrongDimension,
                         "closed form needs 4 Schmidt coefficients, got " + std::to_string(padded.first.size()));
  }
  if (compare(padded.first, padded.second) != ComparisonVerdict::Incomparable) {
    throw CatalysisError(ErrorKind::NotIncomparable, "closed form applies to incomparable pairs only");
  }
  return padded;
}

Rational checked_ratio(const Rational& num, const Rational& den, const char* name) {
  if (sgn(den) <= 0) {
    throw CatalysisError(ErrorKind::Internal, std::string("nonpositive denominator in ") + name +
                                                  "; the necessary conditions were bypassed");
  }
  Rational r = num / den;
  r.canonicalize();
  return r;
}

}  // namespace

NecessaryConditionReport necessary_conditions_4x4(const SchmidtVector& psi1, const SchmidtVector& psi2) {
  const auto [a, b] = checked_pair(psi1, psi2);
  NecessaryConditionReport r;
  r.first_prefix_dominated = a[0] <= b[0];
  r.second_prefix_exceeds = a[0] + a[1] > b[0] + b[1];
  r.third_prefix_dominated = a[0] + a[1] + a[2] <= b[0] + b[1] + b[2];
  r.holds = r.first_prefix_dominated && r.second_prefix_exceeds && r.third_prefix_dominated;
  r.interleaving_chain = b[0] >= a[0] && a[0] >= a[1] && a[1] > b[1] && b[1] >= b[2] && b[2] > a[2] &&
                         a[2] >= a[3] && a[3] >= b[3];
  if (r.holds && !r.interleaving_chain) {
    throw CatalysisError(ErrorKind::Internal, "necessary conditions hold but the interleaving chain does not");
  }
  return r;
}

IntervalBounds4x4 interval_bounds_4x4(const SchmidtVector& psi1, const SchmidtVector& psi2) {
  const auto [a, b] = pad_to_common_length(psi1, psi2);
  if (a.size() != 4) throw CatalysisError(ErrorKind::WrongDimension, "closed form needs 4 Schmidt coefficients");

  const Rational lower_mid = checked_ratio(a[0] + a[1] - b[0], b[1] + b[2], "(a1+a2-b1)/(b2+b3)");
  const Rational lower_tail = 1 - checked_ratio(a[3] - b[3], b[2] - a[2], "(a4-b4)/(b3-a3)");

  const Rational upper_head = checked_ratio(b[0], a[0] + a[1], "b1/(a1+a2)");
  const Rational upper_mid = checked_ratio(b[0] - a[0], a[1] - b[1], "(b1-a1)/(a2-b2)");
  // a3 = a4 = 0 forces b4 = 0, and the bottom-two constraint reads 0 >= 0.
  const Rational upper_tail =
      sgn(a[2] + a[3]) == 0 ? Rational(1) : Rational(1 - checked_ratio(b[3], a[2] + a[3], "b4/(a3+a4)"));

  IntervalBounds4x4 out{std::max(lower_mid, lower_tail), std::min({upper_head, upper_mid, upper_tail})};
  out.lower.canonicalize();
  out.upper.canonicalize();
  return out;
}

std::optional<ClosedInterval> catalyst_interval_4x4(const SchmidtVector& psi1, const SchmidtVector& psi2) {
  if (!necessary_conditions_4x4(psi1, psi2).holds) return std::nullopt;
  const auto bounds = interval_bounds_4x4(psi1, psi2);
  const Rational lo = std::max(bounds.lower, Rational(1, 2));
  const Rational hi = std::min(bounds.upper, Rational(1));
  if (lo > hi) return std::nullopt;
  return ClosedInterval(lo, hi);
}

}  // namespace catalysis
