// Truncated Hankel matrices, BMOA norms and the inequality checks.
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"

namespace lunar {
namespace {

  using testing::random_complex;

  SymbolSeq seq(std::size_t n, double (*f)(std::size_t)) {
    SymbolSeq s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = f(i);
    return s;
  }

  double inv_succ(std::size_t n) { return 1.0 / static_cast<double>(n + 1); }
  double inv_sqrt_succ(std::size_t n) { return 1.0 / std::sqrt(static_cast<double>(n + 1)); }
  double one(std::size_t) { return 1.0; }

  TEST(HankelMatrix, Examples) {
    DenseMatrix e00 = DenseMatrix::Zero(3, 3);
    e00(0, 0)       = 1.0;
    EXPECT_EQ(hankel_matrix({1.0}, 3), e00);

    DenseMatrix h(2, 2);
    h << 1.0, 0.5, 0.5, 1.0 / 3.0;
    EXPECT_TRUE(hankel_matrix(seq(10, inv_succ), 2).isApprox(h, 1e-15));
    EXPECT_EQ(hilbert_matrix(2), hankel_matrix(seq(4, inv_succ), 2));

    DenseMatrix g1(2, 2);
    g1 << 0.0, 1.0, 1.0, 0.0;
    EXPECT_EQ(hankel_matrix({0.0, 1.0}, 2), g1);
    EXPECT_THROW(hankel_matrix({1.0}, 0), InputError);
  }

  TEST(HankelMatrix, TruncationExactness) {
    SymbolSeq s{1.0, 2.0, 3.0, 0.0, 0.0};
    EXPECT_TRUE(truncation_is_exact(s, 3));
    EXPECT_FALSE(truncation_is_exact(s, 2));
    EXPECT_NEAR(spectral_norm(hankel_matrix(s, 3)), spectral_norm(hankel_matrix(s, 9)), 1e-12);
  }

  TEST(Bmoa, ShiftHasNormOne) {
    for (std::size_t N : {2u, 3u, 7u}) {
      EXPECT_NEAR(bmoa_p_trunc({0.0, 1.0}, 2.0, N), 1.0, 1e-12);
    }
  }

  TEST(Bmoa, GeometricClosedForm) {
    for (double r : {0.2, 0.5, 0.8}) {
      for (std::size_t N : {1u, 4u, 16u}) {
        SymbolSeq s(2 * N);
        for (std::size_t n = 0; n < s.size(); ++n) s[n] = std::pow(r, static_cast<double>(n));
        double const expected = std::sqrt((1 - std::pow(r, 4.0 * N)) / (1 - std::pow(r, 4.0)));
        EXPECT_NEAR(bmoa_p_trunc(s, 2.0, N), expected, 1e-10);
      }
    }
  }

  TEST(Bmoa, InverseSqrtSweepApproachesSqrtPi) {
    double prev = 0.0;
    for (std::size_t N = 1; N <= 512; N *= 2) {
      double const v = bmoa_p_trunc(seq(2 * N, inv_sqrt_succ), 2.0, N);
      EXPECT_GT(v, prev);
      EXPECT_LT(v, std::sqrt(std::numbers::pi));
      prev = v;
    }
    EXPECT_NEAR(prev * prev, spectral_norm(hilbert_matrix(512)), 1e-10);
  }

  TEST(Bmoa, SupremumExponentAndErrors) {
    EXPECT_DOUBLE_EQ(bmoa_p_trunc({0.5, Complex(0, -3.0), 1.0}, std::numeric_limits<double>::infinity(), 2), 3.0);
    EXPECT_THROW(bmoa_p_trunc({1.0}, 0.5, 2), InputError);
  }

  TEST(Fefferman, Examples) {
    EXPECT_DOUBLE_EQ(fefferman_block_functional({1.0}, 2.0, 8), 1.0);
    EXPECT_DOUBLE_EQ(fefferman_block_functional({0.0, 1.0}, 2.0, 8), 1.0);
    // Frozen from a direct evaluation of the block sums.
    double const v = fefferman_block_functional(seq(128, inv_succ), 1.0, 64);
    EXPECT_NEAR(v, 1.92677716194002, 1e-12);
    EXPECT_THROW(fefferman_block_functional({1.0}, std::numeric_limits<double>::infinity(), 2), InputError);
    EXPECT_THROW(fefferman_block_functional({1.0}, 2.0, 0), InputError);
  }

  TEST(Fefferman, MatchesIndependentEvaluation) {
    std::mt19937_64                        rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 30; ++t) {
      SymbolSeq s(1 + rng() % 20);
      for (auto& c : s) c = Complex(u(rng), u(rng));
      double const p = 1.0 + t % 3;
      std::size_t const nmax = 1 + rng() % 10;
      double best = 0.0;
      for (std::size_t n = 1; n <= nmax; ++n) {
        std::vector<double> blocks(s.size() / n + 1, 0.0);
        for (std::size_t j = n; j < s.size(); ++j) blocks[j / n] += std::pow(std::abs(s[j]), p);
        double total = 0.0;
        for (double b : blocks) total += b * b;
        best = std::max(best, std::pow(total, 0.5 / p));
      }
      EXPECT_NEAR(fefferman_block_functional(s, p, nmax), std::abs(s[0]) + best, 1e-12);
    }
  }

  TEST(Hilbert, SweepExamples) {
    auto sweep = hilbert_norm_sweep({1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024});
    EXPECT_NEAR(sweep[0].second, 1.0, 1e-14);
    EXPECT_NEAR(sweep[1].second, (4.0 + std::sqrt(13.0)) / 6.0, 1e-14);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      EXPECT_LT(sweep[i].second, std::numbers::pi);
      if (i > 0) {
        EXPECT_GT(sweep[i].second, sweep[i - 1].second);
      }
    }
  }

  TEST(Poisson, Examples) {
    auto half = poisson_cb_norm(0.5, 10);
    EXPECT_NEAR(half.cb_norm, std::sqrt(16.0 / 15.0), 1e-14);
    EXPECT_TRUE(half.matches);
    auto janson = poisson_cb_norm(std::sqrt(0.5), 10);
    EXPECT_NEAR(janson.cb_norm, std::sqrt(4.0 / 3.0), 1e-14);
    EXPECT_GT(janson.cb_norm, 1.0);
    auto far = poisson_cb_norm(0.9, 50);
    EXPECT_NEAR(far.trunc_hankel_norm, (1 - std::pow(0.9, 200)) / (1 - 0.6561), 1e-10);
    EXPECT_THROW(poisson_cb_norm(1.0, 3), InputError);
    EXPECT_THROW(poisson_cb_norm(0.0, 3), InputError);
  }

  TEST(Poisson, ClosedFormOnGrid) {
    for (double r : {0.05, 0.3, 0.5, 0.7, 0.9, 0.97}) {
      for (std::size_t N : {1u, 2u, 5u, 20u, 50u}) {
        auto p = poisson_cb_norm(r, N);
        EXPECT_TRUE(p.matches) << r << " " << N;
        EXPECT_LE(p.trunc_hankel_norm, p.cb_norm * p.cb_norm + 1e-12);
      }
    }
  }

  TEST(Holder, AllOnesIsEquality) {
    for (std::size_t N : {1u, 5u, 32u}) {
      auto s   = seq(2 * N - 1, one);
      auto rep = hankel_holder_check(s, s, 2.0, N);
      EXPECT_NEAR(rep.lhs, static_cast<double>(N), 1e-10);
      EXPECT_NEAR(rep.rhs, static_cast<double>(N), 1e-10);
      EXPECT_TRUE(rep.holds);
    }
  }

  TEST(Holder, HarmonicTimesOnes) {
    auto rep = hankel_holder_check(seq(127, inv_succ), seq(127, one), 2.0, 64);
    EXPECT_TRUE(rep.holds);
    EXPECT_GE(rep.slack, 0.0);
    EXPECT_LT(rep.lhs, std::numbers::pi);
    EXPECT_DOUBLE_EQ(rep.params.at("q"), 2.0);
  }

  TEST(Holder, EndpointExponents) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
      auto a = random_complex(rng, 15, 1), b = random_complex(rng, 15, 1);
      SymbolSeq sa(a.data(), a.data() + 15), sb(b.data(), b.data() + 15);
      EXPECT_TRUE(hankel_holder_check(sa, sb, 1.0, 8).holds);
      EXPECT_TRUE(hankel_holder_check(sa, sb, std::numeric_limits<double>::infinity(), 8).holds);
    }
    EXPECT_THROW(hankel_holder_check({1.0}, {1.0}, 0.9, 2), InputError);
  }

  TEST(Holder, RandomTrialsAllHold) {
    auto trials = holder_trials(2024, 100);
    EXPECT_EQ(trials.size(), 100u);
    EXPECT_DOUBLE_EQ(fraction_holding(trials), 1.0);
  }

  TEST(FourierSchur, Examples) {
    VectorSymbolSeq unit{3, {DenseVector::Unit(3, 1)}};
    auto            a = fourier_schur_check({1.0}, unit, {64, true});
    EXPECT_NEAR(a.lhs, 1.0, 1e-12);
    EXPECT_NEAR(a.rhs, 1.0, 1e-12);
    EXPECT_TRUE(a.holds);

    DenseVector     v = DenseVector::Constant(2, Complex(0.6, 0.0));
    v(1)              = Complex(0.0, 0.8);
    VectorSymbolSeq shifted{2, {DenseVector::Zero(2), v}};
    auto            b = fourier_schur_check({0.0, 1.0}, shifted, {64, true});
    EXPECT_NEAR(b.lhs, 1.0, 1e-12);
    EXPECT_NEAR(b.params.at("h1_norm"), 1.0, 1e-12);
    EXPECT_NEAR(b.rhs, 1.0, 1e-12);
    EXPECT_TRUE(b.holds);
  }

  TEST(FourierSchur, InputErrors) {
    VectorSymbolSeq f{2, {DenseVector::Zero(2), DenseVector::Zero(2), DenseVector::Zero(2)}};
    EXPECT_THROW(fourier_schur_check({1.0}, f, {4, false}), InputError);
    VectorSymbolSeq wrong{2, {DenseVector::Zero(3)}};
    EXPECT_THROW(fourier_schur_check({1.0}, wrong, {8, false}), InputError);
  }

  TEST(FourierSchur, RandomTrialsAllHold) {
    auto trials = fourier_schur_trials(7, 50);
    EXPECT_DOUBLE_EQ(fraction_holding(trials), 1.0);
    for (auto const& r : trials) {
      EXPECT_LT(r.params.at("quadrature_error"), 1e-6);
    }
  }

  TEST(FourierSchur, QuadratureIsExactForSquaredNorm) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
      VectorSymbolSeq f;
      f.dim = 2;
      double energy = 0.0;
      for (int n = 0; n < 6; ++n) {
        f.coeffs.push_back(random_complex(rng, 2, 1));
        energy += f.coeffs.back().squaredNorm();
      }
      // The H^1 mean never exceeds the H^2 norm.
      EXPECT_LE(h1_norm_quadrature(f, 4096), std::sqrt(energy) + 1e-12);
    }
  }

  TEST(S4Hankel, Examples) {
    auto a = s4_hankel_check({0.0, 1.0}, {{0.0, 1.0}});
    EXPECT_NEAR(a.lhs, 1.0, 1e-12);
    EXPECT_NEAR(a.rhs, 1.0, 1e-12);
    EXPECT_TRUE(a.holds);

    auto b = s4_hankel_check({1.0}, {{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}});
    EXPECT_TRUE(b.holds);
    EXPECT_NEAR(b.params.at("gram"), 3.0, 1e-12);

    auto c = s4_hankel_check({1.0, 2.0}, {{0.0, 0.0}});
    EXPECT_DOUBLE_EQ(c.lhs, 0.0);
    EXPECT_DOUBLE_EQ(c.rhs, 0.0);
    EXPECT_TRUE(c.holds);
  }

  TEST(S4Hankel, RandomTrialsAllHold) {
    EXPECT_DOUBLE_EQ(fraction_holding(s4_trials(5, 50)), 1.0);
  }

  TEST(HankelProperties, NondecreasingInN) {
    std::mt19937_64 rng(30);
    for (int t = 0; t < 30; ++t) {
      auto      v = random_complex(rng, 20, 1);
      SymbolSeq s(v.data(), v.data() + 20);
      double    prev = 0.0;
      for (std::size_t N = 1; N <= 12; ++N) {
        double const cur = spectral_norm(hankel_matrix(s, N));
        EXPECT_GE(cur, prev - 1e-12);
        prev = cur;
      }
    }
  }

  TEST(HankelProperties, DilationMonotone) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
      std::size_t const N = 2 + t % 6;
      auto              v = random_complex(rng, static_cast<Eigen::Index>(2 * N - 1), 1);
      SymbolSeq         a(v.data(), v.data() + v.size());
      auto dilated = [&](double r) {
        SymbolSeq s(a.size());
        for (std::size_t n = 0; n < a.size(); ++n) s[n] = std::pow(r, static_cast<double>(n)) * a[n];
        return spectral_norm(hankel_matrix(s, N));
      };
      double prev = 0.0;
      for (int k = 1; k < 20; ++k) {
        double const cur = dilated(k / 20.0);
        EXPECT_GE(cur, prev - 1e-12);
        prev = cur;
      }
      EXPECT_NEAR(dilated(1.0 - 1e-12), spectral_norm(hankel_matrix(a, N)), 1e-9);
    }
  }

  TEST(Reproduction, RowsPass) {
    for (auto const& row : reproduction_table()) {
      EXPECT_TRUE(row.pass) << row.name << " expected " << row.expected << " got " << row.computed;
    }
  }

}  // namespace
}  // namespace lunar
