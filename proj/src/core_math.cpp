#include "catalysis/core_math.hpp"

#include "catalysis/errors.hpp"

#include <algorithm>
#include <numeric>

namespace catalysis {

namespace detail {

OrderedDistribution::OrderedDistribution(std::vector<Rational> entries, std::string_view what)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw CatalysisError(ErrorKind::InvalidVector, std::string(what) + " must be nonempty");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i].canonicalize();
    if (sgn(entries_[i]) < 0) {
      throw CatalysisError(ErrorKind::NegativeEntry, std::string(what) + " has a negative entry");
    }
    if (i > 0 && entries_[i] > entries_[i - 1]) {
      throw CatalysisError(ErrorKind::InvalidVector, std::string(what) + " is not nonincreasing");
    }
    total += entries_[i];
  }
  if (total != 1) {
    throw CatalysisError(ErrorKind::InvalidVector,
                         std::string(what) + " sums to " + total.get_str() + ", expected 1");
  }
}

}  // namespace detail

SchmidtVector SchmidtVector::padded(std::size_t n) const {
  std::vector<Rational> out(entries_.begin(), entries_.end());
  if (n > out.size()) out.resize(n, Rational(0));
  return SchmidtVector(std::move(out));
}

CatalystCandidate CatalystCandidate::two_level(const Rational& c) {
  return CatalystCandidate({c, Rational(1 - c)});
}

CatalystCandidate CatalystCandidate::trivial(std::size_t k) {
  std::vector<Rational> e(k, Rational(0));
  if (!e.empty()) e[0] = 1;
  return CatalystCandidate(std::move(e));
}

const char* to_string(ComparisonVerdict verdict) {
  switch (verdict) {
    case ComparisonVerdict::ForwardTransformable: return "ForwardTransformable";
    case ComparisonVerdict::BackwardTransformable: return "BackwardTransformable";
    case ComparisonVerdict::Equivalent: return "Equivalent";
    case ComparisonVerdict::Incomparable: return "Incomparable";
  }
  return "?";
}

SchmidtVector normalize_and_sort(std::span<const Rational> raw) {
  std::vector<Rational> v(raw.begin(), raw.end());
  Rational total = 0;
  for (auto& x : v) {
    x.canonicalize();
    if (sgn(x) < 0) throw CatalysisError(ErrorKind::NegativeEntry, "entry " + x.get_str() + " is negative");
    total += x;
  }
  if (sgn(total) == 0) throw CatalysisError(ErrorKind::ZeroVector, "entries sum to zero");
  for (auto& x : v) {
    x /= total;
    x.canonicalize();
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return SchmidtVector(std::move(v));
}

SchmidtVector normalize_and_sort(std::span<const std::string> raw) {
  std::vector<Rational> parsed;
  parsed.reserve(raw.size());
  for (const auto& s : raw) parsed.push_back(parse_rational(s));
  return normalize_and_sort(std::span<const Rational>(parsed));
}

std::vector<Rational> prefix_sums(std::span<const Rational> values) {
  std::vector<Rational> out(values.size());
  Rational running = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    running += values[i];
    out[i] = running;
  }
  return out;
}

bool is_majorized(std::span<const Rational> a, std::span<const Rational> b, Padding padding) {
  if (padding == Padding::Strict && a.size() != b.size()) {
    throw CatalysisError(ErrorKind::LengthMismatch, "vectors of length " + std::to_string(a.size()) + " and " +
                                                        std::to_string(b.size()));
  }
  const std::size_t n = std::max(a.size(), b.size());
  Rational sa = 0;
  Rational sb = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (l < a.size()) sa += a[l];
    if (l < b.size()) sb += b[l];
    if (sa > sb) return false;
  }
  return sa == sb;
}

ComparisonVerdict compare(const SchmidtVector& psi1, const SchmidtVector& psi2) {
  const bool forward = is_majorized(psi1, psi2);
  const bool backward = is_majorized(psi2, psi1);
  if (forward && backward) return ComparisonVerdict::Equivalent;
  if (forward) return ComparisonVerdict::ForwardTransformable;
  if (backward) return ComparisonVerdict::BackwardTransformable;
  return ComparisonVerdict::Incomparable;
}

ProductSpectrum tensor_spectrum(const SchmidtVector& psi, const CatalystCandidate& phi) {
  struct Entry {
    Rational value;
    ProductOrigin origin;
  };
  std::vector<Entry> entries;
  entries.reserve(psi.size() * phi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = 0; j < phi.size(); ++j) {
      entries.push_back({psi[i] * phi[j], {i, j}});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.value != y.value) return x.value > y.value;
    return x.origin < y.origin;
  });
  ProductSpectrum out;
  out.values.reserve(entries.size());
  out.origins.reserve(entries.size());
  for (auto& e : entries) {
    out.values.push_back(std::move(e.value));
    out.origins.push_back(e.origin);
  }
  return out;
}

bool verify_catalyst(const SchmidtVector& psi1, const SchmidtVector& psi2, const CatalystCandidate& phi) {
  auto [a, b] = pad_to_common_length(psi1, psi2);
  const auto sa = tensor_spectrum(a, phi);
  const auto sb = tensor_spectrum(b, phi);
  return is_majorized(sa.values, sb.values, Padding::Strict);
}

Rational top_l_sum(std::span<const Rational> values, std::size_t l) {
  if (l < 1 || l > values.size()) {
    throw CatalysisError(ErrorKind::IndexOutOfRange,
                         "l = " + std::to_string(l) + " outside [1, " + std::to_string(values.size()) + "]");
  }
  std::vector<Rational> v(values.begin(), values.end());
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l - 1), v.end(), std::greater<>());
  return std::accumulate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l), Rational(0));
}

std::pair<SchmidtVector, SchmidtVector> pad_to_common_length(const SchmidtVector& a, const SchmidtVector& b) {
  const std::size_t n = std::max(a.size(), b.size());
  return {a.padded(n), b.padded(n)};
}

}  // namespace catalysis
