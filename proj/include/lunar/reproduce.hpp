// lunar-lab: fixed reference values and randomized inequality suites.
#ifndef LUNAR_REPRODUCE_HPP_
#define LUNAR_REPRODUCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "lunar/boolean_op.hpp"
#include "lunar/corpus.hpp"
#include "lunar/hankel_system.hpp"
#include "lunar/hardy.hpp"
#include "lunar/tensor_norm.hpp"

namespace lunar {

  struct ReproductionRow {
    std::string name;
    double      expected  = 0.0;
    double      computed  = 0.0;
    double      abs_error = 0.0;
    double      tol       = 0.0;
    bool        pass      = false;
    std::string source;  // closed form or suite description
  };

  inline ReproductionRow make_row(std::string name,
                                  double      expected,
                                  double      computed,
                                  double      tol,
                                  std::string source) {
    ReproductionRow r{std::move(name), expected, computed, std::abs(computed - expected), tol, false,
                      std::move(source)};
    r.pass = r.abs_error <= tol;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixed families
  ////////////////////////////////////////////////////////////////////////

  // 2Gamma_0 - 2Gamma_1 - Id on the window {0, 1}.
  inline double nat2_identity_norm(int m) {
    auto sys = build_hankel_system(nat_window(2));
    return lincomb_tensor_norm(sys, CoeffFamily::scalar({{"0", 2.0}, {"1", -2.0}}, -1.0), m);
  }

  // 4 red + 2 orange - blue on the 3 x 3 board.
  inline double checkerboard_norm(int m) {
    auto sys = build_hankel_system(checkerboard3());
    return lincomb_tensor_norm(
        sys, CoeffFamily::scalar({{"red", 4.0}, {"orange", 2.0}, {"blue", -1.0}}), m);
  }

  // {I, e_00, e_11} on C^2 with coefficients (1, -1, -1).
  inline std::vector<TensorTerm> diagonal_family_terms() {
    auto one = [](double v) { return DenseMatrix::Constant(1, 1, v); };
    return {{one(1.0), BooleanOp::identity(2)},
            {one(-1.0), BooleanOp(2, 2, {{0, 0}})},
            {one(-1.0), BooleanOp(2, 2, {{1, 1}})}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Randomized inequality suites
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<InequalityReport> holder_trials(std::uint64_t seed,
                                                     std::size_t   n_trials,
                                                     std::size_t   N = 64) {
    std::mt19937_64                        rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double const                           ps[] = {4.0 / 3.0, 2.0, 4.0};
    std::vector<InequalityReport>          out;
    for (std::size_t t = 0; t < n_trials; ++t) {
      SymbolSeq    a(2 * N - 1), b(2 * N - 1);
      double const da = 2.0 * u(rng), db = 2.0 * u(rng);
      for (std::size_t n = 0; n < a.size(); ++n) {
        double const k = static_cast<double>(n + 1);
        a[n]           = u(rng) / std::pow(k, da);
        b[n]           = u(rng) / std::pow(k, db);
      }
      out.push_back(hankel_holder_check(a, b, ps[t % 3], N));
    }
    return out;
  }

  inline std::vector<InequalityReport> fourier_schur_trials(std::uint64_t seed,
                                                            std::size_t   n_trials,
                                                            std::size_t   n_nodes = 4096) {
    std::mt19937_64                  rng(seed);
    std::normal_distribution<double> g;
    std::vector<InequalityReport>    out;
    for (std::size_t t = 0; t < n_trials; ++t) {
      SymbolSeq phi(1 + rng() % 9);
      for (auto& c : phi) {
        c = Complex(g(rng), g(rng));
      }
      VectorSymbolSeq f;
      f.dim = 3;
      f.coeffs.resize(1 + rng() % 9);
      for (auto& v : f.coeffs) {
        v.resize(3);
        for (auto& e : v) {
          e = Complex(g(rng), g(rng));
        }
      }
      out.push_back(fourier_schur_check(phi, f, {n_nodes, true}));
    }
    return out;
  }

  // Mutually orthogonal families via Gram-Schmidt on coefficient vectors.
  inline std::vector<InequalityReport> s4_trials(std::uint64_t seed, std::size_t n_trials) {
    std::mt19937_64                  rng(seed);
    std::normal_distribution<double> g;
    std::vector<InequalityReport>    out;
    for (std::size_t t = 0; t < n_trials; ++t) {
      SymbolSeq phi(1 + rng() % 7);
      for (auto& c : phi) {
        c = Complex(g(rng), g(rng));
      }
      std::size_t const      K = 1 + rng() % 3;
      std::size_t const      L = std::max<std::size_t>(K, 1 + rng() % 7);
      std::vector<SymbolSeq> fam(K, SymbolSeq(L));
      for (auto& f : fam) {
        for (auto& c : f) {
          c = Complex(g(rng), g(rng));
        }
      }
      for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
          Complex const ip = inner(fam[k], fam[j]) / inner(fam[j], fam[j]).real();
          for (std::size_t n = 0; n < L; ++n) {
            fam[k][n] -= ip * fam[j][n];
          }
        }
      }
      out.push_back(s4_hankel_check(phi, fam));
    }
    return out;
  }

  inline double fraction_holding(std::vector<InequalityReport> const& v) {
    if (v.empty()) {
      return 0.0;
    }
    std::size_t ok = 0;
    for (auto const& r : v) {
      ok += r.holds ? 1 : 0;
    }
    return static_cast<double>(ok) / static_cast<double>(v.size());
  }

  inline std::vector<std::size_t> hilbert_sizes() {
    std::vector<std::size_t> n;
    for (std::size_t k = 1; k <= 1024; k *= 2) {
      n.push_back(k);
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // The full table
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<ReproductionRow> reproduction_table(std::uint64_t seed = 2024) {
    std::vector<ReproductionRow> rows;
    rows.push_back(make_row("nat2-identity/plain", std::sqrt(5.0), nat2_identity_norm(1), 1e-9,
                            "||2G0 - 2G1 - Id|| = sqrt(5)"));
    rows.push_back(make_row("nat2-identity/tensor", 3.0, nat2_identity_norm(2), 1e-9,
                            "||2G0(x)G0 - 2G1(x)G1 - Id(x)Id|| = 3"));
    rows.push_back(make_row("checkerboard/plain", 3.0 * std::sqrt(3.0), checkerboard_norm(1), 1e-9,
                            "||4 red + 2 orange - blue|| = 3 sqrt(3)"));
    rows.push_back(make_row("checkerboard/tensor", std::sqrt((std::sqrt(345.0) + 37.0) / 2.0),
                            checkerboard_norm(2), 1e-9, "sqrt((sqrt(345) + 37) / 2)"));
    auto const diag = diagonal_family_terms();
    rows.push_back(make_row("diagonal-family/plain", 0.0, lincomb_tensor_norm(diag, 1), 1e-12,
                            "I - e00 - e11 = 0"));
    rows.push_back(make_row("diagonal-family/tensor", 1.0, lincomb_tensor_norm(diag, 2), 1e-12,
                            "||I(x)I - e00(x)e00 - e11(x)e11|| = 1"));

    auto const sweep = hilbert_norm_sweep(hilbert_sizes());
    bool       increasing = true, bounded = true;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      bounded = bounded && sweep[i].second < std::numbers::pi;
      if (i > 0) {
        increasing = increasing && sweep[i].second > sweep[i - 1].second;
      }
      if (sweep[i].first == 2) {
        rows.push_back(make_row("hilbert/N=2", (4.0 + std::sqrt(13.0)) / 6.0, sweep[i].second,
                                1e-12, "(4 + sqrt(13)) / 6"));
      }
    }
    rows.push_back(make_row("hilbert/strictly-increasing", 1.0, increasing ? 1.0 : 0.0, 0.0,
                            "N = 1, 2, 4, ..., 1024"));
    rows.push_back(make_row("hilbert/below-pi", 1.0, bounded ? 1.0 : 0.0, 0.0,
                            "every truncation < pi"));
    rows.push_back(make_row("hilbert/N=1024", std::numbers::pi, sweep.back().second,
                            std::numeric_limits<double>::infinity(),
                            "logged distance to pi, not asserted"));

    for (double r : {0.3, 0.5, 0.9, std::sqrt(0.5)}) {
      for (std::size_t N : {5, 50}) {
        auto        p = poisson_cb_norm(r, N);
        std::string tag = "poisson/r=" + std::to_string(r).substr(0, 6) + ",N=" + std::to_string(N);
        rows.push_back(make_row(tag, p.closed_form, p.trunc_hankel_norm, 1e-10,
                                "(1 - r^(4N)) / (1 - r^4)"));
      }
      auto p = poisson_cb_norm(r, 5);
      rows.push_back(make_row("poisson-cb/r=" + std::to_string(r).substr(0, 6),
                              std::pow(1.0 - std::pow(r, 4.0), -0.5), p.cb_norm, 1e-12,
                              "(1 - r^4)^(-1/2)"));
      rows.push_back(make_row("poisson-cb-above-one/r=" + std::to_string(r).substr(0, 6), 1.0,
                              p.cb_norm > 1.0 ? 1.0 : 0.0, 0.0, "cb norm exceeds 1"));
    }

    rows.push_back(make_row("holder/fraction-holding", 1.0,
                            fraction_holding(holder_trials(seed, 100)), 0.0,
                            "100 trials, p in {4/3, 2, 4}, N = 64"));
    rows.push_back(make_row("fourier-schur/fraction-holding", 1.0,
                            fraction_holding(fourier_schur_trials(seed + 1, 50)), 0.0,
                            "50 trials, degree <= 8, d = 3, 4096 nodes"));
    rows.push_back(make_row("s4-hankel/fraction-holding", 1.0,
                            fraction_holding(s4_trials(seed + 2, 50)), 0.0,
                            "50 trials, orthogonal families"));
    return rows;
  }

}  // namespace lunar

#endif  // LUNAR_REPRODUCE_HPP_
