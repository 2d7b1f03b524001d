// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"

namespace {

  using namespace lunar;
  using Clock = std::chrono::steady_clock;

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string fmt(char const* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
  }

  bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
  }

  std::vector<MapTable> diagram_corpus() {
    return {nat_window(6),
            nat_power_window(2, 4),
            free_monoid_window(2, 3),
            sl2_window(3),
            group_division(cyclic_group_table(5)),
            polynomial_map({1, 2, 1, 3, 6, 6})};
  }

  // The base tables followed by 50 seeded restrictions of each.
  std::vector<MapTable> diagram_corpus_with_restrictions() {
    auto            base = diagram_corpus();
    auto            all  = base;
    std::mt19937_64 rng(4);
    for (auto const& t : base) {
      for (int i = 0; i < 50; ++i) {
        auto rows = testing::random_nonempty_subset(rng, t.n_rows());
        auto cols = testing::random_nonempty_subset(rng, t.n_cols());
        all.push_back(restrict_table(t, rows, cols));
      }
    }
    return all;
  }

  Outcome nat2_identity() {
    auto         t0    = Clock::now();
    auto         sys   = build_hankel_system(nat_window(2));
    auto         c     = CoeffFamily::scalar({{"0", 2.0}, {"1", -2.0}}, -1.0);
    double const plain = lincomb_tensor_norm(sys, c, 1), tensor = lincomb_tensor_norm(sys, c, 2);
    double const dt    = seconds_since(t0);
    return {near(plain, std::sqrt(5.0), 1e-9) && near(tensor, 3.0, 1e-9) && dt < 1.0,
            fmt("m=1 %.12f, m=2 %.12f, %.3fs", plain, tensor, dt)};
  }

  Outcome checkerboard() {
    auto         t0  = Clock::now();
    auto         sys = build_hankel_system(checkerboard3());
    auto         c   = CoeffFamily::scalar({{"red", 4.0}, {"orange", 2.0}, {"blue", -1.0}});
    double const plain = lincomb_tensor_norm(sys, c, 1), tensor = lincomb_tensor_norm(sys, c, 2);
    double const dt    = seconds_since(t0);
    return {near(plain, 3.0 * std::sqrt(3.0), 1e-9)
                && near(tensor, std::sqrt((std::sqrt(345.0) + 37.0) / 2.0), 1e-9) && dt < 1.0,
            fmt("m=1 %.12f, m=2 %.12f, %.3fs", plain, tensor, dt)};
  }

  Outcome diagonal_family() {
    auto         terms = diagonal_family_terms();
    double const plain = lincomb_tensor_norm(terms, 1), tensor = lincomb_tensor_norm(terms, 2);
    return {near(plain, 0.0, 1e-12) && near(tensor, 1.0, 1e-12),
            fmt("m=1 %.3g, m=2 %.15f", plain, tensor)};
  }

  Outcome diagrams() {
    auto        t0     = Clock::now();
    auto        tables = diagram_corpus_with_restrictions();
    std::size_t failed = 0, checks = 0;
    for (auto const& t : tables) {
      auto rep = verify_absorption_diagrams(t);
      checks += rep.checks.size();
      failed += rep.all_pass() ? 0 : 1;
    }
    double const dt = seconds_since(t0);
    return {failed == 0 && dt < 60.0,
            fmt("%.0f tables, %.0f checks, %.0f failing", static_cast<double>(tables.size()),
                static_cast<double>(checks), static_cast<double>(failed))
                + fmt(", %.2fs", dt)};
  }

  Outcome nat_factorization() {
    auto rep = verify_nat_factorization(6);
    return {rep.all_pass(), fmt("%.0f checks, %.0f failing", static_cast<double>(rep.checks.size()),
                                static_cast<double>(rep.n_failed()))};
  }

  Outcome sap_consistency() {
    auto      t0 = Clock::now();
    SapConfig cfg;
    cfg.n_samples = 200;
    cfg.dims      = {1, 2};
    cfg.seed      = 7;
    double      worst = 1.0;
    std::size_t bad   = 0;
    auto        tables = diagram_corpus_with_restrictions();
    for (auto const& t : tables) {
      auto rep = sap_probe(build_hankel_system(t), cfg);
      worst    = std::max(worst, rep.kappa_lower_bound);
      bad += (rep.kappa_lower_bound <= 1.0 + 1e-6 && rep.n_errors == 0) ? 0 : 1;
    }
    auto board = build_hankel_system(checkerboard3());
    auto r1 = sap_probe(board, cfg), r2 = sap_probe(board, cfg);
    bool const falsified = r1.verdict == SapVerdict::falsified && !r1.witnesses.empty()
                           && r1.witnesses == r2.witnesses && dump(to_json(r1)) == dump(to_json(r2));
    return {bad == 0 && falsified,
            fmt("%.0f tables, max kappa lb %.10f, %.0f over bound", static_cast<double>(tables.size()),
                worst, static_cast<double>(bad))
                + fmt("; checkerboard kappa lb %.6f, %.0f witnesses", r1.kappa_lower_bound,
                      static_cast<double>(r1.witnesses.size()))
                + fmt(", %.1fs", seconds_since(t0))};
  }

  Outcome lunar_oracle() {
    std::mt19937_64 rng(7);
    std::size_t     n = 0, disagree = 0, lunar = 0;
    auto one = [&](MapTable const& t) {
      bool const fast  = check_lunar(t, LunarMethod::fast, false).is_lunar;
      bool const brute = check_lunar(t, LunarMethod::brute, false).is_lunar;
      disagree += fast == brute ? 0 : 1;
      lunar += fast ? 1 : 0;
      ++n;
    };
    for (int i = 0; i < 12000; ++i) {
      std::size_t const rows = 1 + rng() % 4, cols = 1 + rng() % 4, labels = 1 + rng() % 8;
      one(i % 2 == 0 ? testing::random_table(rng, rows, cols, labels)
                     : testing::random_injective_table(rng, rows, cols, std::max({rows, cols, labels})));
    }
    for (auto const& t : diagram_corpus()) one(t);
    for (auto const& t : {nat_window(8), checkerboard3(), quadratic_map({1, 1, 1, 12, 12}),
                          quadratic_map({1, 1, 1, 15, 15}), free_monoid_window(3, 2),
                          group_division(cyclic_group_table(7)), transpose_table(nat_window(5)),
                          tensor_tables(nat_window(3), checkerboard3())}) {
      one(t);
    }
    return {disagree == 0 && n >= 10000,
            fmt("%.0f tables, %.0f lunar, %.0f disagreements", static_cast<double>(n),
                static_cast<double>(lunar), static_cast<double>(disagree))};
  }

  Outcome restricted_equality() {
    std::mt19937_64 rng(8);
    std::size_t     runs = 0, unequal = 0;
    double          worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      std::size_t const      n = 1 + rng() % 6, k = 1 + rng() % 3;
      std::vector<BooleanOp> fam;
      for (std::size_t j = 0; j < k; ++j) fam.push_back(testing::random_partial_permutation(rng, n));
      std::vector<DenseMatrix> nonneg, b;
      for (std::size_t j = 0; j < k; ++j) {
        nonneg.push_back(testing::random_complex(rng, 2, 2).cwiseAbs().cast<Complex>());
        b.push_back(testing::random_complex(rng, 2, 2));
      }
      for (int m : {2, 3}) {
        for (auto const& rep : {positivity_restricted_sap_check(fam, restricted::NonNegative{nonneg}, m),
                                positivity_restricted_sap_check(fam, restricted::ConjugateSquare{b}, m),
                                positivity_restricted_sap_check(fam, restricted::AdjointSquare{b}, m)}) {
          ++runs;
          worst = std::max(worst, rep.rel_diff);
          unequal += rep.rel_diff <= 1e-8 ? 0 : 1;
        }
      }
    }
    std::size_t bad_traces = 0;
    for (int i = 0; i < 100; ++i) {
      std::size_t const      n = 1 + rng() % 6;
      std::vector<BooleanOp> fam;
      for (int j = 0; j < 3; ++j) fam.push_back(testing::random_partial_permutation(rng, n));
      auto rep = trace_word_check(fam, 1 + i % 5, 50, i);
      bad_traces += rep.all_in_range && rep.all_closed ? 0 : 1;
    }
    return {unequal == 0 && bad_traces == 0,
            fmt("%.0f comparisons, max rel diff %.3g, %.0f families with traces out of range",
                static_cast<double>(runs), worst, static_cast<double>(bad_traces))};
  }

  Outcome poisson() {
    bool   ok    = true;
    double worst = 0.0;
    for (double r : {0.3, 0.5, 0.9, std::sqrt(0.5)}) {
      for (std::size_t N : {5u, 50u}) {
        auto rep = poisson_cb_norm(r, N);
        worst    = std::max(worst, std::abs(rep.trunc_hankel_norm - rep.closed_form));
        ok       = ok && rep.matches;
      }
    }
    for (int k = 1; k < 100; ++k) {
      double const r   = k / 100.0;
      auto         rep = poisson_cb_norm(r, 5);
      ok = ok && rep.cb_norm > 1.0 && near(rep.cb_norm, 1.0 / std::sqrt(1.0 - std::pow(r, 4.0)), 1e-14);
    }
    return {ok, fmt("max truncation error %.3g", worst)};
  }

  Outcome hilbert() {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= 1024; n *= 2) sizes.push_back(n);
    auto sweep = hilbert_norm_sweep(sizes);
    bool ok    = near(sweep[1].second, (4.0 + std::sqrt(13.0)) / 6.0, 1e-12);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      ok = ok && sweep[i].second < std::numbers::pi;
      if (i > 0) ok = ok && sweep[i].second > sweep[i - 1].second;
    }
    return {ok, fmt("N=2 %.15f, N=1024 %.10f, pi - last %.3g", sweep[1].second, sweep.back().second,
                    std::numbers::pi - sweep.back().second)};
  }

  Outcome inequality_suites() {
    auto   h = holder_trials(2024, 100), f = fourier_schur_trials(2025, 50), s = s4_trials(2026, 50);
    double min_slack = std::numeric_limits<double>::infinity();
    bool   ok        = h.size() == 100 && f.size() == 50 && s.size() == 50;
    for (auto const* suite : {&h, &f, &s}) {
      for (auto const& r : *suite) {
        ok        = ok && r.holds && r.slack >= 0.0;
        min_slack = std::min(min_slack, r.slack);
      }
    }
    return {ok, fmt("holder %.2f, fourier-schur %.2f, s4 %.2f holding", fraction_holding(h),
                    fraction_holding(f), fraction_holding(s))
                    + fmt(", min slack %.3g", min_slack)};
  }

  Outcome hereditary() {
    SapConfig cfg;
    cfg.n_samples     = 200;
    cfg.dims          = {1, 2};
    cfg.seed          = 12;
    cfg.subset_trials = 20;
    auto z7           = sap_probe(build_hankel_system(group_division(cyclic_group_table(7))), cfg);
    cfg.subset_trials = 0;
    auto prod         = tensor_tables(nat_window(3), group_division(cyclic_group_table(3)));
    bool const lunar  = check_lunar(prod).is_lunar;
    auto tens         = sap_probe(build_hankel_system(prod), cfg);
    bool const ok     = z7.verdict == SapVerdict::consistent && z7.n_errors == 0
                    && tens.verdict == SapVerdict::consistent && tens.n_errors == 0 && lunar;
    return {ok, fmt("Z/7 kappa lb %.10f, tensor kappa lb %.10f", z7.kappa_lower_bound,
                    tens.kappa_lower_bound)};
  }

}  // namespace

int main() {
  std::vector<std::pair<char const*, std::function<Outcome()>>> const criteria{
      {"N[0,2) with identity reaches sqrt(5) then 3", nat2_identity},
      {"checkerboard reaches 3 sqrt(3) then sqrt((sqrt(345)+37)/2)", checkerboard},
      {"diagonal family reaches 0 then 1", diagonal_family},
      {"absorption diagrams on corpus and restrictions", diagrams},
      {"natural-number factorization on N[0,6)", nat_factorization},
      {"SAP probe consistent on corpus, falsified on checkerboard", sap_consistency},
      {"fast and brute lunar checks agree", lunar_oracle},
      {"restricted coefficient equality and word traces", restricted_equality},
      {"Poisson truncations and cb norms", poisson},
      {"Hilbert sweep increasing and below pi", hilbert},
      {"Hoelder, Fourier-Schur and S4 suites hold", inequality_suites},
      {"hereditary SAP on Z/7 compressions and a tensor product", hereditary},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
