// lunar-lab: spectral and Schatten norms of complex matrices.
#ifndef LUNAR_DENSE_HPP_
#define LUNAR_DENSE_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

#include "lunar/errors.hpp"

namespace lunar {

  using Complex     = std::complex<double>;
  using DenseMatrix = Eigen::MatrixXcd;
  using DenseVector = Eigen::VectorXcd;

  inline constexpr std::size_t kDenseLimit = 400;

  struct PowerConfig {
    double        tol      = 1e-10;
    std::size_t   max_iter = 100000;
    std::uint64_t seed     = 0x9e3779b97f4a7c15ULL;
  };

  inline Eigen::VectorXd singular_values(DenseMatrix const& m) {
    if (m.size() == 0) {
      return Eigen::VectorXd();
    }
    if (!m.allFinite()) {
      throw InputError("matrix has non-finite entries");
    }
    return Eigen::JacobiSVD<DenseMatrix>(m).singularValues();
  }

  // Largest eigenvalue of the smaller Gram matrix, square-rooted.
  inline double gram_spectral_norm(DenseMatrix const& m) {
    if (!m.allFinite()) {
      throw InputError("matrix has non-finite entries");
    }
    DenseMatrix g = m.rows() <= m.cols() ? DenseMatrix(m * m.adjoint())
                                         : DenseMatrix(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(g, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }

  // Largest singular value of a linear map given by apply (C^n_in -> C^n_out)
  // and apply_adjoint, by power iteration on A^H A from a seeded start.
  template <typename Apply, typename ApplyAdjoint>
  double power_norm(std::size_t         n_in,
                    Apply&&             apply,
                    ApplyAdjoint&&      apply_adjoint,
                    PowerConfig const&  cfg = {}) {
    if (n_in == 0) {
      return 0.0;
    }
    std::mt19937_64                  rng(cfg.seed);
    std::normal_distribution<double> g;
    DenseVector                      v(static_cast<Eigen::Index>(n_in));
    for (auto& e : v) {
      e = Complex(g(rng), g(rng));
    }
    v.normalize();
    double estimate = 0.0, residual = std::numeric_limits<double>::infinity();
    for (std::size_t it = 0; it < cfg.max_iter; ++it) {
      DenseVector w = apply(v);
      DenseVector u = apply_adjoint(w);
      double      lambda = w.squaredNorm();
      double      unorm  = u.norm();
      if (unorm == 0.0) {
        return 0.0;
      }
      double next = std::sqrt(lambda);
      residual    = (u - lambda * v).norm() / std::max(lambda, 1e-300);
      v           = u / unorm;
      if (it > 0 && std::abs(next - estimate) <= cfg.tol * next) {
        return std::max(next, std::sqrt(unorm));
      }
      estimate = next;
    }
    throw NumericError("power iteration did not converge", estimate, residual);
  }

  inline double spectral_norm_power(DenseMatrix const& m, PowerConfig const& cfg = {}) {
    if (!m.allFinite()) {
      throw InputError("matrix has non-finite entries");
    }
    return power_norm(
        static_cast<std::size_t>(m.cols()),
        [&](DenseVector const& v) -> DenseVector { return m * v; },
        [&](DenseVector const& v) -> DenseVector { return m.adjoint() * v; },
        cfg);
  }

  inline double spectral_norm(DenseMatrix const& m) {
    if (m.size() == 0) {
      return 0.0;
    }
    if (static_cast<std::size_t>(std::min(m.rows(), m.cols())) <= kDenseLimit) {
      return gram_spectral_norm(m);
    }
    return spectral_norm_power(m);
  }

  inline double schatten_norm(DenseMatrix const& m, double p) {
    if (!(p >= 1.0)) {
      throw InputError("Schatten exponent must be >= 1");
    }
    if (std::isinf(p)) {
      return spectral_norm(m);
    }
    auto   s   = singular_values(m);
    double top = s.size() ? s.maxCoeff() : 0.0;
    if (top == 0.0) {
      return 0.0;
    }
    double acc = 0.0;
    for (double x : s) {
      acc += std::pow(x / top, p);
    }
    return top * std::pow(acc, 1.0 / p);
  }

}  // namespace lunar

#endif  // LUNAR_DENSE_HPP_
