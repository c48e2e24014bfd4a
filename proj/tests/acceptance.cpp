// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything numerical runs on the exact rational backend, so a
// "residual is zero" claim below means identically zero, not within an eps.
//
// Usage: acceptance <path-to-cli>   (the CLI is used by criterion 10 only)

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <subdet/subdet.hpp>

#include "run_cli.hpp"

namespace {

using namespace subdet;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << (pass ? " PASS" : " FAIL") << " - " << detail
            << std::endl;
  if (!pass) ++g_failures;
}

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Criterion 1: the disjoint-pair determinant identity has residual exactly
// zero on random integer matrices, at least 200 instances per k in 1..4.
void criterion_1() {
  const auto t0 = Clock::now();
  Rng rng(1001);
  int checked = 0, bad = 0;
  for (int k = 1; k <= 4; ++k) {
    for (int rep = 0; rep < 200; ++rep) {
      const auto a = random_int_matrix<Rational>(rng, 2 * k, 2 * k, -9, 9);
      const auto [s, t] = random_overlap_pairs(rng, 2 * k, 2 * k, k, 0, 0);
      const auto id = verify_disjoint_identity(a, s, t);
      ++checked;
      if (!(id.holds && id.residual == 0)) ++bad;
    }
  }
  std::ostringstream d;
  d << "disjoint identity residual zero on " << checked << " instances, k = 1..4 ("
    << ms_since(t0) << " ms)";
  report(1, bad == 0 && checked >= 800, d.str());
}

// Criterion 2: the general-overlap identity has residual exactly zero for
// every overlap profile (r, c) != (k, k), at least 50 instances per profile.
void criterion_2() {
  const auto t0 = Clock::now();
  Rng rng(1002);
  int checked = 0, bad = 0, profiles = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int r = 0; r <= k; ++r) {
      for (int c = 0; c <= k; ++c) {
        if (r == k && c == k) continue;
        ++profiles;
        for (int rep = 0; rep < 50; ++rep) {
          const auto a = random_int_matrix<Rational>(rng, 2 * k, 2 * k, -9, 9);
          const auto [s, t] = random_overlap_pairs(rng, 2 * k, 2 * k, k, r, c);
          const auto id = verify_general_identity(a, s, t);
          ++checked;
          if (!(id.holds && id.residual == 0 && id.r == r && id.c == c)) ++bad;
        }
      }
    }
  }
  std::ostringstream d;
  d << "general identity residual zero on " << checked << " instances over " << profiles
    << " overlap profiles, k = 1..3 (" << ms_since(t0) << " ms)";
  report(2, bad == 0 && checked >= 50 * profiles, d.str());
}

// Criterion 3: the quantitative exchange inequality
// |det(A_S) det(A_T)| <= (2k^2 + 8k) * max_U |det(A_{S delta U}) det(A_{T delta U})|
// holds on random instances with arbitrary distinct pairs.
void criterion_3() {
  const auto t0 = Clock::now();
  Rng rng(1003);
  int checked = 0, bad = 0;
  double max_ratio = 0.0;
  while (checked < 500) {
    const int k = rng.uniform_int(1, 3);
    int m = rng.uniform_int(k, 7), n = rng.uniform_int(k, 7);
    if (m == k && n == k) n = k + 1;  // S != T must exist
    const auto a = random_int_matrix<Rational>(rng, m, n, -9, 9);
    const auto [s, t] = random_distinct_pairs(rng, m, n, k);
    const auto id = verify_exchange_inequality(a, s, t);
    ++checked;
    if (!id.holds) ++bad;
    if (id.gamma > 0) max_ratio = std::max(max_ratio, to_double(id.lhs / id.gamma));
  }
  std::ostringstream d;
  d << "exchange inequality holds on " << checked
    << " random pairs; empirical max lhs/gamma = " << max_ratio << " (" << ms_since(t0) << " ms)";
  report(3, bad == 0, d.str());
}

// Criteria 4 and 5 share the pipeline runs: crude init, local search at
// alpha = 1/2, exhaustive oracle, all exact.
void criteria_4_and_5() {
  const auto t0 = Clock::now();
  Rng rng(1004);
  int checked = 0, bad_bound = 0, bad_moves = 0, zero_starts = 0;
  double max_ratio = 0.0;
  const Rational alpha(1, 2);
  while (checked < 100) {
    const int k = rng.uniform_int(1, 3);
    const int m = rng.uniform_int(k, 7), n = rng.uniform_int(k, 7);
    // Every tenth instance is rank-deficient by construction so the
    // zero-determinant certificate path runs inside the pipeline too.
    const auto a = checked % 10 == 9 ? random_low_rank_matrix(rng, m, n, k - 1, -4, 4)
                                     : random_int_matrix<Rational>(rng, m, n, -4, 4);
    const auto s0 = crude_init(a, k);
    const auto d0 = det_sub(a, s0);
    const auto opt = maxdet_oracle(a, k);
    ++checked;
    if (d0.is_zero()) {
      // A zero crude-init determinant certifies rank < k, hence maxdet = 0.
      ++zero_starts;
      if (!opt.value.is_zero() || rank_exact(a) >= static_cast<std::size_t>(k)) ++bad_bound;
      continue;
    }
    const auto trace = local_search(a, s0, SearchConfig{alpha, 0});
    const Rational found = trace.result_det().magnitude;

    // Criterion 4: maxdet <= ((2k^2 + 8k) / alpha)^(2k) * |det at the local maximum|.
    const Rational base = Rational(2 * k * k + 8 * k) / alpha;
    const Rational bound = pow_rational(base, static_cast<unsigned>(2 * k));
    if (!(opt.value.magnitude <= bound * found)) ++bad_bound;
    if (found > 0) max_ratio = std::max(max_ratio, to_double(opt.value.magnitude / found));

    // Criterion 5: with strict acceptance each move doubles |det|, so the
    // number of accepted moves is at most ceil(log2(maxdet / |det start|)) + 1.
    const Rational ratio = opt.value.magnitude / d0.magnitude;
    Rational p(1);
    std::size_t ceil_log2 = 0;
    while (p < ratio) {
      p *= 2;
      ++ceil_log2;
    }
    if (trace.accepted_moves() > ceil_log2 + 1) ++bad_moves;
  }
  const auto ms = ms_since(t0);
  {
    std::ostringstream d;
    d << "certificate bound holds on " << checked << " pipeline runs (" << zero_starts
      << " rank-deficient); empirical max maxdet/|local| = " << max_ratio << " (" << ms << " ms)";
    report(4, bad_bound == 0, d.str());
  }
  {
    std::ostringstream d;
    d << "accepted moves within the doubling budget on all " << checked << " runs";
    report(5, bad_moves == 0, d.str());
  }
}

// Criterion 6: the Hadamard fixtures are alpha-local maxima with a provable
// optimality gap. For k = 4, c = 2 the maximal ratio is certified exactly by
// expanding every column choice: a subset with t columns from the scaled
// Hadamard block has det^2 = 2^(-t) * (integer minor det)^2.
void criterion_6() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;

  // k = 4, c = 2: float search from the identity block accepts no move.
  {
    const auto a = hadamard_fixture<double>(4, 2);
    const IndexPair start{{0, 1, 2, 3}, {0, 1, 2, 3}};
    const auto trace = local_search(a, start, SearchConfig{Rational(1, 2), 0});
    if (trace.accepted_moves() != 0) {
      ok = false;
      d << "k=4 fixture accepted " << trace.accepted_moves() << " moves; ";
    }
  }

  // Exact ratio 4: enumerate all C(8,4) column subsets of [I | H/sqrt(2)].
  {
    const auto h = sylvester_hadamard(4);
    Rational best_sq(0);
    detail::for_each_combination(8, 4, [&](const std::vector<int>& cols) {
      std::vector<int> id_rows;   // rows consumed by identity columns
      std::vector<int> h_cols;    // columns taken from the Hadamard block
      for (int j : cols) (j < 4 ? id_rows : h_cols).push_back(j < 4 ? j : j - 4);
      std::vector<int> minor_rows;
      for (int i = 0; i < 4; ++i)
        if (std::find(id_rows.begin(), id_rows.end(), i) == id_rows.end()) minor_rows.push_back(i);
      const std::size_t t = h_cols.size();
      Rational dm(1);  // empty minor: the subset is the identity block itself
      if (t > 0) {
        std::vector<Rational> e;
        for (int i : minor_rows)
          for (int j : h_cols)
            e.push_back(Rational(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        dm = det(Matrix<Rational>(t, t, std::move(e))).value();
      }
      const Rational sq = dm * dm / pow_rational(Rational(2), static_cast<unsigned>(t));
      if (sq > best_sq) best_sq = sq;
    });
    if (best_sq != Rational(16)) {
      ok = false;
      d << "k=4 max det^2 != 16; ";
    }
  }

  // k = 2, c = 1: exact search accepts no move and the oracle gap is exactly 2.
  {
    const auto a = hadamard_fixture<Rational>(2, 1);
    const IndexPair start{{0, 1}, {0, 1}};
    const auto trace = local_search(a, start, SearchConfig{Rational(1, 2), 0});
    const auto opt = maxdet_oracle(a, 2);
    if (trace.accepted_moves() != 0 || opt.value.magnitude != Rational(2)) {
      ok = false;
      d << "k=2 fixture not a stuck local maximum with gap 2; ";
    }
  }

  d << "Hadamard fixtures locally maximal; certified ratios 4 (k=4, c=2) and 2 (k=2, c=1) ("
    << ms_since(t0) << " ms)";
  report(6, ok, d.str());
}

// Criterion 7: on diag(1..8) the search escapes the smallest-entry corner all
// the way to the global maximum. At alpha = 1/2 the last k = 3 improvement
// has ratio exactly 1/alpha and strict acceptance stalls, so this runs at
// alpha = 2/3 (the stall itself is pinned in the unit tests).
void criterion_7() {
  const auto t0 = Clock::now();
  std::vector<Rational> diag_entries;
  for (int v = 1; v <= 8; ++v) diag_entries.push_back(Rational(v));
  const auto a = diagonal_matrix<Rational>(diag_entries);
  const Rational alpha(2, 3);
  bool ok = true;
  std::ostringstream d;

  {
    const auto trace = local_search(a, IndexPair{{0, 1}, {0, 1}}, SearchConfig{alpha, 0});
    const IndexPair want{{6, 7}, {6, 7}};
    if (!(trace.result_det().magnitude == Rational(56) && trace.result() == want)) {
      ok = false;
      d << "k=2 missed 56; ";
    }
  }
  {
    const auto trace = local_search(a, IndexPair{{0, 1, 2}, {0, 1, 2}}, SearchConfig{alpha, 0});
    const IndexPair want{{5, 6, 7}, {5, 6, 7}};
    if (!(trace.result_det().magnitude == Rational(336) && trace.result() == want)) {
      ok = false;
      d << "k=3 missed 336; ";
    }
  }

  d << "diag(1..8) search reaches 56 (k=2) and 336 (k=3) at alpha = 2/3 (" << ms_since(t0)
    << " ms)";
  report(7, ok, d.str());
}

// Criterion 8: on matrices of rank k - 1 the crude init determinant is zero,
// the exact rank agrees, and the oracle confirms every k x k minor vanishes.
void criterion_8() {
  const auto t0 = Clock::now();
  Rng rng(1008);
  int checked = 0, bad = 0;
  while (checked < 50) {
    const int k = rng.uniform_int(2, 4);
    const int m = rng.uniform_int(k, 7), n = rng.uniform_int(k, 7);
    const auto a = random_low_rank_matrix(rng, m, n, k - 1, -4, 4);
    ++checked;
    const bool zero_init = det_sub(a, crude_init(a, k)).is_zero();
    const bool low_rank = rank_exact(a) < static_cast<std::size_t>(k);
    const bool zero_oracle = maxdet_oracle(a, k).value.is_zero();
    if (!(zero_init && low_rank && zero_oracle)) ++bad;
  }
  std::ostringstream d;
  d << "rank-deficient detection on " << checked << " instances (" << ms_since(t0) << " ms)";
  report(8, bad == 0, d.str());
}

// Criterion 9: Cauchy-Binet cross-check of the determinant and enumeration
// machinery, exact, residual identically zero.
void criterion_9() {
  const auto t0 = Clock::now();
  Rng rng(1009);
  int checked = 0, bad = 0;
  while (checked < 50) {
    const int m = rng.uniform_int(1, 3);
    const int n = rng.uniform_int(m, 6);
    const auto a = random_int_matrix<Rational>(rng, m, n, -9, 9);
    const auto b = random_int_matrix<Rational>(rng, n, m, -9, 9);
    const auto rep = cauchy_binet_check(a, b);
    ++checked;
    if (!(rep.holds && rep.residual == 0)) ++bad;
  }
  std::ostringstream d;
  d << "Cauchy-Binet residual zero on " << checked << " instances (" << ms_since(t0) << " ms)";
  report(9, bad == 0, d.str());
}

// Criterion 10: the CLI is deterministic; identical invocations produce
// byte-identical output.
void criterion_10(const std::string& cli) {
  const auto t0 = Clock::now();
  using cli_testing::run_cli;
  const auto dir = cli_testing::fresh_scratch_dir("acceptance_scratch");
  const auto input =
      cli_testing::write_file(dir, "m.txt", "3 -1 4 2\n0 5 -2 1\n7 1 0 -3\n2 -4 1 6\n");

  const std::string max_args =
      "maximize " + input.string() + " --k 2 --backend exact --certify --seed 42";
  const auto m1 = run_cli(cli, max_args);
  const auto m2 = run_cli(cli, max_args);

  const std::string ver_args = "verify --kind exchange --count 5 --k-range 1..2 --max-dim 5 --seed 42";
  const auto v1 = run_cli(cli, ver_args);
  const auto v2 = run_cli(cli, ver_args);

  const bool ok = m1.exit_code == 0 && m1.output == m2.output && !m1.output.empty() &&
                  v1.exit_code == 0 && v1.output == v2.output && !v1.output.empty();
  std::ostringstream d;
  d << "repeated CLI runs byte-identical (maximize --certify, verify) (" << ms_since(t0) << " ms)";
  report(10, ok, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <cli-binary>\n";
    return 2;
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criteria_4_and_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(argv[1]);
  std::cout << (g_failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(g_failures) +
                                      " criteria failed\n");
  return g_failures == 0 ? 0 : 1;
}
