#include "catalysis/region_search.hpp"

#include "catalysis/errors.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace catalysis {

const char* to_string(CatalystVerdict verdict) {
  switch (verdict) {
    case CatalystVerdict::AlreadyTransformable: return "AlreadyTransformable";
    case CatalystVerdict::Equivalent: return "Equivalent";
    case CatalystVerdict::ReverseOnly: return "ReverseOnly";
    case CatalystVerdict::Exists: return "Exists";
    case CatalystVerdict::NotExists: return "NotExists";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Hyperplanes

bool normalize_plane(std::vector<Rational>& c) {
  auto first = std::find_if(c.begin(), c.end(), [](const Rational& v) { return sgn(v) != 0; });
  if (first == c.end()) return false;
  const Rational scale = *first;
  for (auto& v : c) {
    v /= scale;
    v.canonicalize();
  }
  return true;
}

std::vector<Hyperplane> simplex_facets(std::size_t k) {
  std::vector<Hyperplane> out;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    std::vector<Rational> c(k, Rational(0));
    c[j] = 1;
    c[j + 1] = -1;
    out.push_back({std::move(c), PlaneKind::Ordering});
  }
  std::vector<Rational> c(k, Rational(0));
  c[k - 1] = 1;
  out.push_back({std::move(c), PlaneKind::Boundary});
  return out;
}

// ---------------------------------------------------------------------------
// Affine functions over the free coordinates y = (x_1, ..., x_{k-1}).

struct Affine {
  std::vector<Rational> a;
  Rational b;
};

Rational evaluate(const Affine& f, std::span<const Rational> y) {
  Rational v = f.b;
  for (std::size_t i = 0; i < f.a.size(); ++i) v += f.a[i] * y[i];
  return v;
}

// sum_j c_j x_j with x_k = 1 - sum_{j<k} y_j.
Affine to_free_coordinates(const std::vector<Rational>& c) {
  const std::size_t k = c.size();
  Affine f;
  f.a.resize(k - 1);
  for (std::size_t j = 0; j + 1 < k; ++j) f.a[j] = c[j] - c[k - 1];
  f.b = c[k - 1];
  return f;
}

// Substitutes y_0 = m and drops the first coordinate.
Affine fix_first(const Affine& f, const Rational& m) {
  Affine g;
  g.a.assign(f.a.begin() + 1, f.a.end());
  g.b = f.b + f.a[0] * m;
  return g;
}

bool is_constant(const Affine& f) {
  return std::all_of(f.a.begin(), f.a.end(), [](const Rational& v) { return sgn(v) == 0; });
}

// Unique solution of f_i(y) = 0 for the d functions in `rows`, if any.
std::optional<std::vector<Rational>> solve_square(std::vector<Affine> rows) {
  const std::size_t d = rows.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && sgn(rows[pivot].a[col]) == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || sgn(rows[r].a[col]) == 0) continue;
      const Rational factor = rows[r].a[col] / rows[col].a[col];
      for (std::size_t c = col; c < d; ++c) rows[r].a[c] -= factor * rows[col].a[c];
      rows[r].b -= factor * rows[col].b;
    }
  }
  std::vector<Rational> y(d);
  for (std::size_t i = 0; i < d; ++i) {
    y[i] = -rows[i].b / rows[i].a[i];
    y[i].canonicalize();
  }
  return y;
}

void for_each_subset(std::size_t m, std::size_t d, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (d > m) return;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == m - d + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool inside_closed(const std::vector<Affine>& domain, std::span<const Rational> y) {
  return std::all_of(domain.begin(), domain.end(), [&](const Affine& f) { return sgn(evaluate(f, y)) >= 0; });
}

// First coordinates of arrangement vertices lying in the closed domain. Every
// bounded cell inside the domain has its vertices among them, so no cell
// starts or ends strictly between two consecutive values.
std::vector<Rational> critical_values(const std::vector<Affine>& fns, const std::vector<Affine>& domain,
                                      std::size_t d) {
  std::vector<Rational> out;
  for_each_subset(fns.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<Affine> rows;
    rows.reserve(d);
    for (auto i : idx) rows.push_back(fns[i]);
    auto y = solve_square(std::move(rows));
    if (y && inside_closed(domain, *y)) out.push_back((*y)[0]);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Affine> restrict_all(const std::vector<Affine>& fns, const Rational& m, bool drop_constant) {
  std::vector<Affine> out;
  out.reserve(fns.size());
  for (const auto& f : fns) {
    Affine g = fix_first(f, m);
    if (drop_constant && is_constant(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

void sample_slab(const std::vector<Affine>& fns, const std::vector<Affine>& domain, std::size_t d,
                 std::vector<Rational>& prefix, std::vector<std::vector<Rational>>& out);

void sample_between(const std::vector<Rational>& crit, const std::vector<Affine>& fns,
                    const std::vector<Affine>& domain, std::size_t d, std::vector<Rational>& prefix,
                    std::vector<std::vector<Rational>>& out) {
  for (std::size_t s = 0; s + 1 < crit.size(); ++s) {
    const Rational m = midpoint(crit[s], crit[s + 1]);
    prefix.push_back(m);
    if (d == 1) {
      out.push_back(prefix);
    } else {
      sample_slab(restrict_all(fns, m, true), restrict_all(domain, m, false), d - 1, prefix, out);
    }
    prefix.pop_back();
  }
}

void sample_slab(const std::vector<Affine>& fns, const std::vector<Affine>& domain, std::size_t d,
                 std::vector<Rational>& prefix, std::vector<std::vector<Rational>>& out) {
  sample_between(critical_values(fns, domain, d), fns, domain, d, prefix, out);
}

std::string signature_key(const SignVector& s) { return std::string(s.begin(), s.end()); }

std::vector<Rational> to_catalyst_coordinates(std::span<const Rational> y) {
  std::vector<Rational> x(y.begin(), y.end());
  Rational last = 1;
  for (const auto& v : y) last -= v;
  last.canonicalize();
  x.push_back(std::move(last));
  return x;
}

bool strictly_ordered_positive(std::span<const Rational> x) {
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    if (!(x[j] > x[j + 1])) return false;
  }
  return sgn(x.back()) > 0;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

struct Row {
  std::vector<Rational> a;
  Rational b;  // a . y + b <= 0
};

// Scales so the first nonzero coefficient has magnitude one.
void normalize_row(Row& r) {
  auto first = std::find_if(r.a.begin(), r.a.end(), [](const Rational& v) { return sgn(v) != 0; });
  if (first == r.a.end()) return;
  const Rational scale = abs(*first);
  for (auto& v : r.a) {
    v /= scale;
    v.canonicalize();
  }
  r.b /= scale;
  r.b.canonicalize();
}

// Drops trivially true rows and keeps the tightest of rows sharing coefficients.
// Returns false when some row is a contradiction 0 <= -b with b > 0.
bool tidy(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, Rational> best;
  for (auto& r : rows) {
    normalize_row(r);
    if (std::all_of(r.a.begin(), r.a.end(), [](const Rational& v) { return sgn(v) == 0; })) {
      if (sgn(r.b) > 0) return false;
      continue;
    }
    auto [it, inserted] = best.emplace(r.a, r.b);
    if (!inserted && r.b > it->second) it->second = r.b;
  }
  rows.clear();
  for (auto& [a, b] : best) rows.push_back({a, b});
  return true;
}

std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t v) {
  std::vector<const Row*> pos, neg;
  std::vector<Row> out;
  for (const auto& r : rows) {
    const int s = sgn(r.a[v]);
    if (s > 0) {
      pos.push_back(&r);
    } else if (s < 0) {
      neg.push_back(&r);
    } else {
      out.push_back(r);
    }
  }
  for (const Row* p : pos) {
    for (const Row* q : neg) {
      const Rational wp = -q->a[v];
      const Rational wq = p->a[v];
      Row combined;
      combined.a.resize(p->a.size());
      for (std::size_t i = 0; i < p->a.size(); ++i) combined.a[i] = wp * p->a[i] + wq * q->a[i];
      combined.a[v] = 0;
      combined.b = wp * p->b + wq * q->b;
      out.push_back(std::move(combined));
    }
  }
  return out;
}

// Bounds on y_v from rows whose other variables are already fixed.
std::pair<std::optional<Rational>, std::optional<Rational>> bounds_for(const std::vector<Row>& rows, std::size_t v,
                                                                       std::span<const Rational> fixed) {
  std::optional<Rational> lo, hi;
  for (const auto& r : rows) {
    Rational rest = r.b;
    for (std::size_t i = 0; i < fixed.size(); ++i) rest += r.a[i] * fixed[i];
    const int s = sgn(r.a[v]);
    if (s == 0) continue;
    Rational root = -rest / r.a[v];
    root.canonicalize();
    if (s > 0) {
      if (!hi || root < *hi) hi = root;
    } else {
      if (!lo || root > *lo) lo = root;
    }
  }
  return {lo, hi};
}

}  // namespace

HyperplaneSet build_hyperplanes(const SchmidtVector& psi1_in, const SchmidtVector& psi2_in, std::size_t k) {
  if (k < 2) throw CatalysisError(ErrorKind::DegenerateSimplex, "catalyst dimension must be at least 2");
  const auto [psi1, psi2] = pad_to_common_length(psi1_in, psi2_in);
  const std::size_t n = psi1.size();

  HyperplaneSet out;
  out.k = k;
  std::set<std::vector<Rational>> seen;
  for (auto& facet : simplex_facets(k)) {
    seen.insert(facet.coefficients);
    out.planes.push_back(std::move(facet));
  }
  for (const SchmidtVector* psi : {&psi1, &psi2}) {
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      for (std::size_t j1 = i1 + 1; j1 < n; ++j1) {
        for (std::size_t j2 = 0; j2 < k; ++j2) {
          for (std::size_t i2 = j2 + 1; i2 < k; ++i2) {
            // psi_{i1} x_{i2} = psi_{j1} x_{j2}
            std::vector<Rational> c(k, Rational(0));
            c[i2] += (*psi)[i1];
            c[j2] -= (*psi)[j1];
            if (!normalize_plane(c)) continue;
            ++out.product_planes_generated;
            if (!seen.insert(c).second) continue;
            ++out.product_planes;
            out.planes.push_back({std::move(c), PlaneKind::Product});
          }
        }
      }
    }
  }
  return out;
}

SignVector sign_vector(const HyperplaneSet& planes, std::span<const Rational> point) {
  SignVector s;
  s.reserve(planes.planes.size());
  for (const auto& p : planes.planes) {
    Rational v = 0;
    for (std::size_t j = 0; j < point.size(); ++j) v += p.coefficients[j] * point[j];
    s.push_back(static_cast<std::int8_t>(sgn(v)));
  }
  return s;
}

std::vector<CellRepresentative> cell_representatives(const HyperplaneSet& planes, Execution execution) {
  const std::size_t k = planes.k;
  if (k < 2) throw CatalysisError(ErrorKind::DegenerateSimplex, "catalyst dimension must be at least 2");
  const std::size_t d = k - 1;

  std::vector<Affine> domain;
  for (const auto& facet : simplex_facets(k)) domain.push_back(to_free_coordinates(facet.coefficients));
  std::vector<Affine> fns = domain;
  for (const auto& p : planes.planes) {
    if (p.kind == PlaneKind::Product) fns.push_back(to_free_coordinates(p.coefficients));
  }

  const std::vector<Rational> crit = critical_values(fns, domain, d);
  const std::size_t slabs = crit.size() < 2 ? 0 : crit.size() - 1;

  auto run_slab = [&](std::size_t s) {
    std::vector<std::vector<Rational>> samples;
    std::vector<Rational> prefix;
    const std::vector<Rational> pair{crit[s], crit[s + 1]};
    sample_between(pair, fns, domain, d, prefix, samples);
    std::vector<CellRepresentative> reps;
    std::set<std::string> local;
    for (const auto& y : samples) {
      auto x = to_catalyst_coordinates(y);
      if (!strictly_ordered_positive(x)) continue;
      SignVector sig = sign_vector(planes, x);
      if (std::find(sig.begin(), sig.end(), 0) != sig.end()) continue;
      if (!local.insert(signature_key(sig)).second) continue;
      reps.push_back({std::move(x), std::move(sig)});
    }
    return reps;
  };

  std::vector<std::vector<CellRepresentative>> per_slab(slabs);
  if (execution == Execution::Serial) {
    for (std::size_t s = 0; s < slabs; ++s) per_slab[s] = run_slab(s);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(slabs); ++s) {
      try {
        per_slab[static_cast<std::size_t>(s)] = run_slab(static_cast<std::size_t>(s));
      } catch (...) {
#pragma omp critical(catalysis_cells_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<CellRepresentative> out;
  std::set<std::string> seen;
  for (auto& slab : per_slab) {
    for (auto& rep : slab) {
      if (seen.insert(signature_key(rep.signature)).second) out.push_back(std::move(rep));
    }
  }
  return out;
}

LinearSystem cell_system(const CellRepresentative& rep, const SchmidtVector& psi1_in, const SchmidtVector& psi2_in) {
  const auto [psi1, psi2] = pad_to_common_length(psi1_in, psi2_in);
  const std::size_t k = rep.point.size();
  if (k < 2) throw CatalysisError(ErrorKind::DegenerateSimplex, "catalyst dimension must be at least 2");
  const std::size_t d = k - 1;
  const std::size_t n = psi1.size();

  // x_j as an affine function of the free coordinates.
  std::vector<Affine> coordinate(k);
  for (std::size_t j = 0; j < d; ++j) {
    coordinate[j].a.assign(d, Rational(0));
    coordinate[j].a[j] = 1;
    coordinate[j].b = 0;
  }
  coordinate[d].a.assign(d, Rational(-1));
  coordinate[d].b = 1;

  struct Term {
    Rational value;
    std::size_t state;
    std::size_t slot;
  };
  auto order_terms = [&](const SchmidtVector& psi) {
    std::vector<Term> terms;
    terms.reserve(n * k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) terms.push_back({psi[i] * rep.point[j], i, j});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
      if (x.value != y.value) return x.value > y.value;
      return std::pair(x.state, x.slot) < std::pair(y.state, y.slot);
    });
    for (std::size_t p = 0; p + 1 < terms.size(); ++p) {
      const Term& x = terms[p];
      const Term& y = terms[p + 1];
      if (x.value != y.value) continue;
      const bool identical =
          (x.slot == y.slot && psi[x.state] == psi[y.state]) || (sgn(psi[x.state]) == 0 && sgn(psi[y.state]) == 0);
      if (!identical) throw CatalysisError(ErrorKind::TieAtRepresentative, "representative lies on a hyperplane");
    }
    return terms;
  };
  const auto terms_a = order_terms(psi1);
  const auto terms_b = order_terms(psi2);

  auto term_affine = [&](const SchmidtVector& psi, const Term& t) {
    Affine f = coordinate[t.slot];
    for (auto& v : f.a) v *= psi[t.state];
    f.b *= psi[t.state];
    return f;
  };
  auto add_scaled = [](LinearConstraint& c, const Affine& f, int sign) {
    for (std::size_t i = 0; i < f.a.size(); ++i) c.coefficients[i] += sign * f.a[i];
    c.constant += sign * f.b;
  };
  auto blank = [&](ConstraintOrigin origin, std::size_t index) {
    LinearConstraint c;
    c.coefficients.assign(d, Rational(0));
    c.constant = 0;
    c.origin = origin;
    c.index = index;
    return c;
  };

  LinearSystem sys;
  sys.variables = d;
  LinearConstraint running = blank(ConstraintOrigin::MajorizationPrefix, 0);
  for (std::size_t l = 0; l < n * k; ++l) {
    add_scaled(running, term_affine(psi1, terms_a[l]), +1);
    add_scaled(running, term_affine(psi2, terms_b[l]), -1);
    running.index = l + 1;
    sys.constraints.push_back(running);
  }
  auto add_ordering = [&](const SchmidtVector& psi, const std::vector<Term>& terms, ConstraintOrigin origin) {
    for (std::size_t l = 0; l + 1 < terms.size(); ++l) {
      LinearConstraint c = blank(origin, l + 1);
      add_scaled(c, term_affine(psi, terms[l + 1]), +1);
      add_scaled(c, term_affine(psi, terms[l]), -1);
      sys.constraints.push_back(std::move(c));
    }
  };
  add_ordering(psi1, terms_a, ConstraintOrigin::OrderingA);
  add_ordering(psi2, terms_b, ConstraintOrigin::OrderingB);
  for (std::size_t j = 0; j < k; ++j) {
    LinearConstraint c = blank(ConstraintOrigin::SimplexBound, j + 1);
    if (j + 1 < k) {
      add_scaled(c, coordinate[j + 1], +1);  // x_{j+1} - x_j <= 0
      add_scaled(c, coordinate[j], -1);
    } else {
      add_scaled(c, coordinate[j], -1);  // -x_k <= 0
    }
    sys.constraints.push_back(std::move(c));
  }
  return sys;
}

std::optional<FeasiblePoint> solve_feasibility(const LinearSystem& system) {
  const std::size_t d = system.variables;
  if (d == 0) {
    for (const auto& c : system.constraints) {
      if (sgn(c.constant) > 0) return std::nullopt;
    }
    return FeasiblePoint{};
  }
  // levels[v] holds rows over y_0 .. y_{v-1}.
  std::vector<std::vector<Row>> levels(d + 1);
  for (const auto& c : system.constraints) levels[d].push_back({c.coefficients, c.constant});
  if (!tidy(levels[d])) return std::nullopt;
  for (std::size_t v = d; v-- > 1;) {
    levels[v] = eliminate(levels[v + 1], v);
    if (!tidy(levels[v])) return std::nullopt;
  }

  FeasiblePoint out;
  const auto [lo, hi] = bounds_for(levels[1], 0, {});
  if (lo && hi && *lo > *hi) return std::nullopt;
  out.first_lo = lo;
  out.first_hi = hi;
  out.point.reserve(d);
  for (std::size_t v = 0; v < d; ++v) {
    const auto [vlo, vhi] = bounds_for(levels[v + 1], v, out.point);
    if (vlo && vhi && *vlo > *vhi) {
      throw CatalysisError(ErrorKind::Internal, "back-substitution left an empty range");
    }
    out.point.push_back(vlo ? *vlo : (vhi ? *vhi : Rational(0)));
  }
  return out;
}

CatalystResult find_catalysts(const SchmidtVector& psi1_in, const SchmidtVector& psi2_in, std::size_t k,
                              Execution execution) {
  if (k < 2 || k > kMaxCatalystDimension) {
    throw CatalysisError(ErrorKind::UnsupportedK, "k = " + std::to_string(k) + " outside the supported range [2, " +
                                                      std::to_string(kMaxCatalystDimension) + "]");
  }
  const auto [psi1, psi2] = pad_to_common_length(psi1_in, psi2_in);

  CatalystResult result;
  switch (compare(psi1, psi2)) {
    case ComparisonVerdict::ForwardTransformable:
      result.verdict = CatalystVerdict::AlreadyTransformable;
      return result;
    case ComparisonVerdict::Equivalent:
      result.verdict = CatalystVerdict::Equivalent;
      return result;
    case ComparisonVerdict::BackwardTransformable:
      result.verdict = CatalystVerdict::ReverseOnly;
      return result;
    case ComparisonVerdict::Incomparable:
      break;
  }

  const HyperplaneSet planes = build_hyperplanes(psi1, psi2, k);
  const auto reps = cell_representatives(planes, execution);

  auto solve_cell = [&](std::size_t c) -> std::optional<CatalystWitness> {
    const auto solved = solve_feasibility(cell_system(reps[c], psi1, psi2));
    if (!solved) return std::nullopt;
    CatalystCandidate phi(to_catalyst_coordinates(solved->point));
    if (!verify_catalyst(psi1, psi2, phi)) {
      throw CatalysisError(ErrorKind::Internal, "witness failed direct verification");
    }
    CatalystWitness w{reps[c].signature, phi, std::nullopt, sgn(phi[k - 1]) == 0};
    if (k == 2) w.interval = ClosedInterval(*solved->first_lo, *solved->first_hi);
    return w;
  };

  std::vector<std::optional<CatalystWitness>> per_cell(reps.size());
  if (execution == Execution::Serial) {
    for (std::size_t c = 0; c < reps.size(); ++c) per_cell[c] = solve_cell(c);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(reps.size()); ++c) {
      try {
        per_cell[static_cast<std::size_t>(c)] = solve_cell(static_cast<std::size_t>(c));
      } catch (...) {
#pragma omp critical(catalysis_region_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  result.stats.hyperplanes = planes.product_planes;
  result.stats.cells_enumerated = reps.size();
  result.stats.systems_solved = reps.size();
  for (auto& w : per_cell) {
    if (!w) continue;
    if (w->lower_dimensional) ++result.stats.lower_dimensional_witnesses;
    result.witnesses.push_back(std::move(*w));
  }
  result.verdict = result.witnesses.empty() ? CatalystVerdict::NotExists : CatalystVerdict::Exists;
  return result;
}

FeasibleSet1D feasible_union_k2(const CatalystResult& result) {
  std::vector<ClosedInterval> intervals;
  for (const auto& w : result.witnesses) {
    if (w.interval) intervals.push_back(*w.interval);
  }
  return merge_intervals(std::move(intervals));
}

}  // namespace catalysis
