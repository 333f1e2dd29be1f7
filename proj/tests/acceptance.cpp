// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "catalysis/cli.hpp"
#include "catalysis/closed_form.hpp"
#include "catalysis/oracle.hpp"
#include "catalysis/region_search.hpp"
#include "catalysis/sweep_k2.hpp"
#include "support/test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace catalysis;
using catalysis::fixtures::q;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= limit_s) {
    o.ok = false;
    o.detail += " (time limit " + std::to_string(limit_s) + " s exceeded)";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] criterion %d: %s  (%.3f s)  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
}

bool single_interval(const FeasibleSet1D& fs, const Rational& lo, const Rational& hi) {
  return fs.intervals.size() == 1 && fs.intervals[0] == ClosedInterval(lo, hi);
}

Outcome reproduce_example(const SchmidtVector& a, const SchmidtVector& b, const Rational& lo, const Rational& hi) {
  const auto closed = catalyst_interval_4x4(a, b);
  const auto swept = find_catalysts_k2(a, b);
  const bool ok = closed && *closed == ClosedInterval(lo, hi) && single_interval(swept, lo, hi);
  std::string detail = "closed form ";
  detail += closed ? "[" + to_fraction_string(closed->lo) + ", " + to_fraction_string(closed->hi) + "]" : "none";
  detail += ", sweep " + std::to_string(swept.intervals.size()) + " interval(s)";
  return {ok, detail};
}

int verify_exit(const char* psi1, const char* psi2, const char* phi) {
  cli::ProblemInput in;
  in.psi1 = cli::split_list(psi1);
  in.psi2 = cli::split_list(psi2);
  in.phi = cli::split_list(phi);
  std::ostringstream out, err;
  return cli::cmd_verify(in, out, err);
}

}  // namespace

int main() {
  criterion(1, "sample pair A interval is exactly [3/5, 5/8]", 1.0, [] {
    return reproduce_example(fixtures::sample_a_psi1(), fixtures::sample_a_psi2(), q(3, 5), q(5, 8));
  });

  criterion(2, "sample pair B interval is exactly [13/25, 25/38]", 1.0, [] {
    return reproduce_example(fixtures::sample_b_psi1(), fixtures::sample_b_psi2(), q(13, 25), q(25, 38));
  });

  criterion(3, "known catalysts verify, (1/2, 1/2) rejected", 1.0, []() -> Outcome {
    const char* e1a = "0.4,0.4,0.1,0.1";
    const char* e1b = "0.5,0.25,0.25,0";
    const char* e2a = "0.4,0.36,0.14,0.1";
    const int accept1 = verify_exit(e1a, e1b, "0.6,0.4");
    const int accept2 = verify_exit(e2a, e1b, "0.65,0.35");
    const int reject = verify_exit(e1a, e1b, "0.5,0.5");
    const bool ok = accept1 == cli::kExitPositive && accept2 == cli::kExitPositive && reject == cli::kExitNegative;
    return {ok, "exit codes " + std::to_string(accept1) + "," + std::to_string(accept2) + "," + std::to_string(reject)};
  });

  criterion(4, "closed form, sweep and region search agree on 1000 random 4x4 pairs", 120.0, []() -> Outcome {
    std::mt19937_64 rng(4004);
    int exists = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto [a, b] = fixtures::random_incomparable_pair(rng, 4, trial % 2 == 0);
      const auto closed = catalyst_interval_4x4(a, b);
      const auto swept = find_catalysts_k2(a, b);
      const auto region = find_catalysts(a, b, 2);
      const auto region_union = feasible_union_k2(region);
      const bool region_exists = region.verdict == CatalystVerdict::Exists;
      const bool agree = closed ? (single_interval(swept, closed->lo, closed->hi) && region_union == swept && region_exists)
                                : (swept.empty() && region_union.empty() && !region_exists);
      if (!agree) return {false, "disagreement at trial " + std::to_string(trial)};
      exists += closed ? 1 : 0;
    }
    return {true, std::to_string(exists) + " of 1000 pairs catalysable"};
  });

  criterion(5, "grid oracle consistent with exact k=2 results on 200 pairs", 300.0, []() -> Outcome {
    std::mt19937_64 rng(5005);
    int negatives = 0, positives = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 4 + static_cast<std::size_t>(trial % 3);
      const auto [a, b] = fixtures::random_incomparable_pair(rng, n, trial % 2 == 0);
      const auto result = find_catalysts(a, b, 2);
      if (result.verdict == CatalystVerdict::NotExists) {
        ++negatives;
        if (grid_search(a, b, {2, 500})) return {false, "grid witness for a NotExists pair at trial " + std::to_string(trial)};
      } else {
        ++positives;
        for (const auto& w : result.witnesses) {
          if (!verify_catalyst(a, b, w.catalyst)) return {false, "witness fails at trial " + std::to_string(trial)};
        }
      }
    }
    return {true, std::to_string(positives) + " Exists, " + std::to_string(negatives) + " NotExists"};
  });

  criterion(6, "top-l sum equals brute-force max subset sum", 10.0, []() -> Outcome {
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::uniform_int_distribution<long> num(0, 1000);
    std::size_t checks = 0;
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Rational> values(size(rng));
      for (auto& v : values) v = q(num(rng), 1000);
      for (std::size_t l = 1; l <= values.size(); ++l) {
        if (top_l_sum(values, l) != fixtures::brute_max_subset_sum(values, l)) return {false, "mismatch at trial " + std::to_string(trial)};
        ++checks;
      }
    }
    return {true, std::to_string(checks) + " (multiset, l) checks"};
  });

  criterion(7, "sweep on random n=50 pairs under 5 s with bounded breakpoints", 5.0 * 3, []() -> Outcome {
    std::mt19937_64 rng(7007);
    std::string detail;
    bool ok = true;
    for (int trial = 0; trial < 3; ++trial) {
      const auto [a, b] = fixtures::random_incomparable_pair(rng, 50, false, 100000);
      const auto start = Clock::now();
      const auto r = sweep_k2(a, b);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      ok = ok && secs < 5.0 && r.breakpoint_count <= 50 * 49 + 2;
      detail += std::to_string(r.breakpoint_count) + " breakpoints in " + std::to_string(secs) + " s; ";
    }
    return {ok, detail};
  });

  criterion(8, "k=3 region search on sample pair A and 20 random pairs", 120.0 * 21, []() -> Outcome {
    std::mt19937_64 rng(8008);
    std::vector<std::pair<SchmidtVector, SchmidtVector>> instances{{fixtures::sample_a_psi1(), fixtures::sample_a_psi2()}};
    for (int i = 0; i < 20; ++i) instances.push_back(fixtures::random_incomparable_pair(rng, 4, i % 2 == 0));
    double worst = 0;
    int enlarged = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const auto& [a, b] = instances[i];
      const auto start = Clock::now();
      const auto r3 = find_catalysts(a, b, 3);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      worst = std::max(worst, secs);
      if (secs >= 120.0) return {false, "instance " + std::to_string(i) + " took " + std::to_string(secs) + " s"};
      for (const auto& w : r3.witnesses) {
        if (!verify_catalyst(a, b, w.catalyst)) return {false, "witness fails on instance " + std::to_string(i)};
      }
      const bool k2 = find_catalysts(a, b, 2).verdict == CatalystVerdict::Exists;
      const bool k3 = r3.verdict == CatalystVerdict::Exists;
      if (k2 && !k3) return {false, "k=2 Exists but k=3 NotExists on instance " + std::to_string(i)};
      if (k3 && !k2) ++enlarged;
      if (i == 0 && !k3) return {false, "sample pair A has no k=3 catalyst"};
    }
    return {true, "worst " + std::to_string(worst) + " s, " + std::to_string(enlarged) + " instance(s) gained a catalyst at k=3"};
  });

  criterion(9, "cell and system counts grow monotonically and sub-quartically in n at k=2", 300.0, []() -> Outcome {
    std::mt19937_64 rng(9009);
    const std::size_t ns[] = {4, 6, 8};
    double cells[3] = {0, 0, 0}, systems[3] = {0, 0, 0};
    const int samples = 30;
    for (int idx = 0; idx < 3; ++idx) {
      for (int s = 0; s < samples; ++s) {
        const auto [a, b] = fixtures::random_incomparable_pair(rng, ns[idx]);
        const auto r = find_catalysts(a, b, 2);
        cells[idx] += static_cast<double>(r.stats.cells_enumerated) / samples;
        systems[idx] += static_cast<double>(r.stats.systems_solved) / samples;
      }
    }
    const bool monotone = cells[0] <= cells[1] && cells[1] <= cells[2] && systems[0] <= systems[1] && systems[1] <= systems[2];
    const bool sub_quartic = cells[2] / cells[0] < 16.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "mean cells %.1f / %.1f / %.1f, systems %.1f / %.1f / %.1f", cells[0], cells[1],
                  cells[2], systems[0], systems[1], systems[2]);
    return {monotone && sub_quartic, buf};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
