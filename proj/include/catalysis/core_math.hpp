#pragma once

#include "catalysis/rational.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace catalysis {

namespace detail {

// Nonincreasing, nonnegative, sums to exactly one.
class OrderedDistribution {
 public:
  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const OrderedDistribution&, const OrderedDistribution&) = default;

 protected:
  OrderedDistribution() = default;
  OrderedDistribution(std::vector<Rational> entries, std::string_view what);

  std::vector<Rational> entries_;
};

}  // namespace detail

/// Ordered Schmidt coefficients of a bipartite pure state.
class SchmidtVector : public detail::OrderedDistribution {
 public:
  /// Validates that `entries` is already sorted, nonnegative and normalized.
  explicit SchmidtVector(std::vector<Rational> entries)
      : OrderedDistribution(std::move(entries), "Schmidt vector") {}

  /// Copy extended with trailing zeros up to length `n` (n >= size()).
  SchmidtVector padded(std::size_t n) const;
};

/// Schmidt coefficients (x_1, ..., x_k) of a candidate catalyst state.
class CatalystCandidate : public detail::OrderedDistribution {
 public:
  explicit CatalystCandidate(std::vector<Rational> entries)
      : OrderedDistribution(std::move(entries), "catalyst") {}

  /// The two-level catalyst (c, 1 - c); requires c in [1/2, 1].
  static CatalystCandidate two_level(const Rational& c);

  /// (1, 0, ..., 0) of length k.
  static CatalystCandidate trivial(std::size_t k);
};

/// Where a product coefficient psi_i * phi_j came from (zero-based indices).
struct ProductOrigin {
  std::size_t state_index;
  std::size_t catalyst_index;

  friend auto operator<=>(const ProductOrigin&, const ProductOrigin&) = default;
};

/// Sorted Schmidt coefficients of psi (x) phi with provenance.
struct ProductSpectrum {
  std::vector<Rational> values;
  std::vector<ProductOrigin> origins;
};

enum class ComparisonVerdict { ForwardTransformable, BackwardTransformable, Equivalent, Incomparable };

const char* to_string(ComparisonVerdict verdict);

enum class Padding { Auto, Strict };

/// Sorts nonincreasing and rescales to sum exactly one.
/// Throws NegativeEntry or ZeroVector.
SchmidtVector normalize_and_sort(std::span<const Rational> raw);

/// Convenience overload: parses each entry with parse_rational first.
SchmidtVector normalize_and_sort(std::span<const std::string> raw);

std::vector<Rational> prefix_sums(std::span<const Rational> values);

inline std::vector<Rational> prefix_sums(const detail::OrderedDistribution& v) {
  return prefix_sums(v.entries());
}

/// Nielsen's criterion: every prefix sum of `a` is bounded by that of `b`.
/// Both inputs must already be sorted nonincreasingly. With Padding::Auto the
/// shorter one is treated as zero-padded; Padding::Strict throws LengthMismatch.
bool is_majorized(std::span<const Rational> a, std::span<const Rational> b, Padding padding = Padding::Auto);

inline bool is_majorized(const SchmidtVector& a, const SchmidtVector& b, Padding padding = Padding::Auto) {
  return is_majorized(a.entries(), b.entries(), padding);
}

ComparisonVerdict compare(const SchmidtVector& psi1, const SchmidtVector& psi2);

/// Sorted multiset {psi_i * phi_j}; ties are broken by (i, j).
ProductSpectrum tensor_spectrum(const SchmidtVector& psi, const CatalystCandidate& phi);

/// True iff psi1 (x) phi is majorized by psi2 (x) phi.
bool verify_catalyst(const SchmidtVector& psi1, const SchmidtVector& psi2, const CatalystCandidate& phi);

/// Sum of the l largest values (1 <= l <= size). Throws IndexOutOfRange.
Rational top_l_sum(std::span<const Rational> values, std::size_t l);

/// Zero-pads the shorter of the two to a common length.
std::pair<SchmidtVector, SchmidtVector> pad_to_common_length(const SchmidtVector& a, const SchmidtVector& b);

}  // namespace catalysis
