#include "catalysis/sweep_k2.hpp"

#include "catalysis/errors.hpp"

#include <algorithm>
#include <exception>

namespace catalysis {

FeasibleSet1D merge_intervals(std::vector<ClosedInterval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const ClosedInterval& x, const ClosedInterval& y) { return x.lo < y.lo; });
  FeasibleSet1D out;
  for (auto& iv : intervals) {
    if (!out.intervals.empty() && iv.lo <= out.intervals.back().hi) {
      if (iv.hi > out.intervals.back().hi) out.intervals.back().hi = iv.hi;
    } else {
      out.intervals.push_back(std::move(iv));
    }
  }
  return out;
}

namespace {

const Rational kHalf(1, 2);

void collect_ratios(const SchmidtVector& psi, std::vector<Rational>& out) {
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = i + 1; j < psi.size(); ++j) {
      Rational den = psi[i] + psi[j];
      if (sgn(den) == 0) continue;
      Rational r = psi[i] / den;
      r.canonicalize();
      if (r > kHalf && r < 1) out.push_back(std::move(r));
    }
  }
}

Rational evaluate(const SchmidtVector& psi, const ProductTerm& t, const Rational& c) {
  return t.level == Level::Major ? Rational(psi[t.state_index] * c) : Rational(psi[t.state_index] * (1 - c));
}

// psi_i * c and psi_j * (1 - c) agree for every c only when both vanish.
bool identical_products(const SchmidtVector& psi, const ProductTerm& x, const ProductTerm& y) {
  const Rational& px = psi[x.state_index];
  const Rational& py = psi[y.state_index];
  if (x.level == y.level) return px == py;
  return sgn(px) == 0 && sgn(py) == 0;
}

}  // namespace

BreakpointList breakpoints(const SchmidtVector& psi1, const SchmidtVector& psi2) {
  std::vector<Rational> interior;
  collect_ratios(psi1, interior);
  collect_ratios(psi2, interior);
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());

  BreakpointList out;
  out.values.reserve(interior.size() + 2);
  out.values.push_back(kHalf);
  for (auto& v : interior) out.values.push_back(std::move(v));
  out.values.emplace_back(1);
  return out;
}

SymbolicOrder fixed_order(const SchmidtVector& psi, const Rational& c0) {
  struct Entry {
    Rational value;
    ProductTerm term;
  };
  std::vector<Entry> entries;
  entries.reserve(2 * psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (Level level : {Level::Major, Level::Minor}) {
      ProductTerm t{i, level};
      entries.push_back({evaluate(psi, t, c0), t});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.value != y.value) return x.value > y.value;
    return x.term < y.term;
  });
  for (std::size_t p = 0; p + 1 < entries.size(); ++p) {
    if (entries[p].value == entries[p + 1].value && !identical_products(psi, entries[p].term, entries[p + 1].term)) {
      throw CatalysisError(ErrorKind::TieAtSamplePoint,
                           "products tie at c = " + c0.get_str() + ", which lies on a breakpoint");
    }
  }
  SymbolicOrder order;
  order.reserve(entries.size());
  for (const auto& e : entries) order.push_back(e.term);
  return order;
}

std::vector<AffineConstraint1D> prefix_constraints(const SymbolicOrder& order_a, const SymbolicOrder& order_b,
                                                   const SchmidtVector& psi1, const SchmidtVector& psi2) {
  if (order_a.size() != order_b.size()) {
    throw CatalysisError(ErrorKind::LengthMismatch, "orderings of different length");
  }
  // psi_i * x contributes (0, psi_i); psi_i * (1 - x) contributes (psi_i, -psi_i).
  auto accumulate = [](AffineConstraint1D& acc, const Rational& coeff, Level level, int sign) {
    if (level == Level::Major) {
      acc.slope += sign * coeff;
    } else {
      acc.constant += sign * coeff;
      acc.slope -= sign * coeff;
    }
  };
  std::vector<AffineConstraint1D> out;
  out.reserve(order_a.size());
  AffineConstraint1D running{0, 0};
  for (std::size_t l = 0; l < order_a.size(); ++l) {
    accumulate(running, psi1[order_a[l].state_index], order_a[l].level, +1);
    accumulate(running, psi2[order_b[l].state_index], order_b[l].level, -1);
    out.push_back(running);
  }
  return out;
}

std::optional<ClosedInterval> solve_affine_1d(std::span<const AffineConstraint1D> constraints,
                                              const ClosedInterval& range) {
  Rational lo = range.lo;
  Rational hi = range.hi;
  for (const auto& c : constraints) {
    const int s = sgn(c.slope);
    if (s == 0) {
      if (sgn(c.constant) > 0) return std::nullopt;
      continue;
    }
    Rational root = -c.constant / c.slope;
    root.canonicalize();
    if (s > 0) {
      if (root < hi) hi = root;
    } else {
      if (root > lo) lo = root;
    }
    if (lo > hi) return std::nullopt;
  }
  return ClosedInterval(lo, hi);
}

std::optional<ClosedInterval> gap_feasibility(const SymbolicOrder& order_a, const SymbolicOrder& order_b,
                                              const ClosedInterval& gap, const SchmidtVector& psi1,
                                              const SchmidtVector& psi2) {
  const auto constraints = prefix_constraints(order_a, order_b, psi1, psi2);
  return solve_affine_1d(constraints, gap);
}

SweepResult sweep_k2(const SchmidtVector& psi1_in, const SchmidtVector& psi2_in, Execution execution) {
  const auto [psi1, psi2] = pad_to_common_length(psi1_in, psi2_in);
  const BreakpointList bp = breakpoints(psi1, psi2);
  const std::size_t gap_count = bp.values.size() - 1;

  auto solve_gap = [&](std::size_t g) -> std::optional<ClosedInterval> {
    const ClosedInterval gap(bp.values[g], bp.values[g + 1]);
    const Rational c0 = gap.midpoint();
    return gap_feasibility(fixed_order(psi1, c0), fixed_order(psi2, c0), gap, psi1, psi2);
  };

  std::vector<std::optional<ClosedInterval>> per_gap(gap_count);
  if (execution == Execution::Serial) {
    for (std::size_t g = 0; g < gap_count; ++g) per_gap[g] = solve_gap(g);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(gap_count); ++g) {
      try {
        per_gap[static_cast<std::size_t>(g)] = solve_gap(static_cast<std::size_t>(g));
      } catch (...) {
#pragma omp critical(catalysis_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<ClosedInterval> hits;
  for (auto& r : per_gap) {
    if (r) hits.push_back(std::move(*r));
  }
  SweepResult out;
  out.feasible = merge_intervals(std::move(hits));
  out.breakpoint_count = bp.values.size();
  out.gaps_solved = gap_count;
  return out;
}

}  // namespace catalysis
