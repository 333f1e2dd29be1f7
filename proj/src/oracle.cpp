#include "catalysis/oracle.hpp"

#include "catalysis/errors.hpp"

#include <limits>

namespace catalysis {

namespace {

void compose(std::size_t remaining, std::size_t cap, std::size_t slots, std::vector<std::size_t>& current,
             std::vector<std::vector<std::size_t>>& out) {
  if (slots == 1) {
    if (remaining <= cap) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  // The remaining slots hold at most (slots - 1) * m each, so m >= remaining / slots.
  const std::size_t min_part = (remaining + slots - 1) / slots;
  for (std::size_t m = std::min(cap, remaining) + 1; m-- > min_part;) {
    current.push_back(m);
    compose(remaining - m, m, slots - 1, current, out);
    current.pop_back();
  }
}

CatalystCandidate to_candidate(const std::vector<std::size_t>& parts, std::size_t denominator) {
  std::vector<Rational> x;
  x.reserve(parts.size());
  for (auto m : parts) {
    Rational v(static_cast<unsigned long>(m), static_cast<unsigned long>(denominator));
    v.canonicalize();
    x.push_back(std::move(v));
  }
  return CatalystCandidate(std::move(x));
}

}  // namespace

std::vector<std::vector<std::size_t>> grid_points(const GridSpec& spec) {
  if (spec.k < 1 || spec.denominator < 1) {
    throw CatalysisError(ErrorKind::InvalidVector, "grid needs k >= 1 and a positive denominator");
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  compose(spec.denominator, spec.denominator, spec.k, current, out);
  return out;
}

std::optional<CatalystCandidate> grid_search(const SchmidtVector& psi1_in, const SchmidtVector& psi2_in,
                                             const GridSpec& spec, Execution execution) {
  const auto [psi1, psi2] = pad_to_common_length(psi1_in, psi2_in);
  const auto points = grid_points(spec);

  if (execution == Execution::Serial) {
    for (const auto& p : points) {
      CatalystCandidate phi = to_candidate(p, spec.denominator);
      if (verify_catalyst(psi1, psi2, phi)) return phi;
    }
    return std::nullopt;
  }

  // Lowest hit index wins regardless of scheduling.
  const auto none = std::numeric_limits<std::ptrdiff_t>::max();
  std::ptrdiff_t first_hit = none;
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_hit)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (i >= first_hit) continue;
    if (verify_catalyst(psi1, psi2, to_candidate(points[static_cast<std::size_t>(i)], spec.denominator))) {
      first_hit = i;
    }
  }
  if (first_hit == none) return std::nullopt;
  return to_candidate(points[static_cast<std::size_t>(first_hit)], spec.denominator);
}

}  // namespace catalysis
