// lunar-lab: truncated Hankel analysis on the circle.
#ifndef LUNAR_HARDY_HPP_
#define LUNAR_HARDY_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "lunar/dense.hpp"
#include "lunar/errors.hpp"

namespace lunar {

  // Fourier coefficients phi(0), phi(1), ... of an analytic polynomial.
  using SymbolSeq = std::vector<Complex>;

  struct VectorSymbolSeq {
    std::size_t              dim = 1;
    std::vector<DenseVector> coeffs;  // f(n) in C^dim
  };

  struct QuadratureConfig {
    std::size_t n_nodes        = 4096;
    bool        error_estimate = true;
  };

  struct InequalityReport {
    double                        lhs       = 0.0;
    double                        rhs       = 0.0;
    double                        allowance = 0.0;  // numerical slack granted
    double                        slack     = 0.0;  // rhs + allowance - lhs
    bool                          holds     = false;
    std::map<std::string, double> params;
  };

  namespace detail {
    inline InequalityReport finish(double lhs, double rhs, double allowance) {
      InequalityReport r;
      r.lhs       = lhs;
      r.rhs       = rhs;
      r.allowance = allowance;
      r.slack     = rhs + allowance - lhs;
      r.holds     = r.slack >= 0.0;
      return r;
    }

    inline std::size_t support_length(SymbolSeq const& s) {
      std::size_t n = s.size();
      while (n > 0 && s[n - 1] == Complex(0.0)) {
        --n;
      }
      return n;
    }

    inline SymbolSeq abs_pow(SymbolSeq const& s, double p) {
      SymbolSeq out(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        out[i] = std::pow(std::abs(s[i]), p);
      }
      return out;
    }

    inline double sup_abs(SymbolSeq const& s) {
      double m = 0.0;
      for (auto const& c : s) {
        m = std::max(m, std::abs(c));
      }
      return m;
    }
  }  // namespace detail

  inline DenseMatrix hankel_matrix(SymbolSeq const& symbol, std::size_t N) {
    if (N < 1) {
      throw InputError("Hankel truncation needs N >= 1");
    }
    auto const  n = static_cast<Eigen::Index>(N);
    DenseMatrix h = DenseMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        auto k = static_cast<std::size_t>(i + j);
        if (k < symbol.size()) {
          h(i, j) = symbol[k];
        }
      }
    }
    return h;
  }

  // The N x N truncation carries every non-zero coefficient.
  inline bool truncation_is_exact(SymbolSeq const& symbol, std::size_t N) {
    return N >= detail::support_length(symbol);
  }

  inline double bmoa_p_trunc(SymbolSeq const& symbol, double p, std::size_t N) {
    if (!(p >= 1.0)) {
      throw InputError("BMOA exponent must be in [1, inf]");
    }
    if (std::isinf(p)) {
      return detail::sup_abs(symbol);
    }
    return std::pow(spectral_norm(hankel_matrix(detail::abs_pow(symbol, p), N)), 1.0 / p);
  }

  // |phi(0)| + sup_{1<=n<=n_max} (sum_{k>=1} (sum_{kn<=j<(k+1)n} |phi(j)|^p)^2)^{1/(2p)}
  inline double fefferman_block_functional(SymbolSeq const& symbol, double p, std::size_t n_max) {
    if (!(p >= 1.0) || std::isinf(p)) {
      throw InputError("Fefferman functional needs p in [1, inf)");
    }
    if (n_max < 1) {
      throw InputError("Fefferman functional needs n_max >= 1");
    }
    double const head = symbol.empty() ? 0.0 : std::abs(symbol[0]);
    double       best = 0.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      double total = 0.0;
      for (std::size_t k = 1; k * n < symbol.size(); ++k) {
        double block = 0.0;
        for (std::size_t j = k * n; j < (k + 1) * n && j < symbol.size(); ++j) {
          block += std::pow(std::abs(symbol[j]), p);
        }
        total += block * block;
      }
      best = std::max(best, std::pow(total, 1.0 / (2.0 * p)));
    }
    return head + best;
  }

  inline DenseMatrix hilbert_matrix(std::size_t N) {
    SymbolSeq s(2 * N);
    for (std::size_t n = 0; n < s.size(); ++n) {
      s[n] = 1.0 / static_cast<double>(n + 1);
    }
    return hankel_matrix(s, N);
  }

  inline std::vector<std::pair<std::size_t, double>>
  hilbert_norm_sweep(std::vector<std::size_t> const& Ns) {
    std::vector<std::pair<std::size_t, double>> out;
    for (auto N : Ns) {
      out.emplace_back(N, spectral_norm(hilbert_matrix(N)));
    }
    return out;
  }

  struct PoissonReport {
    double r                 = 0.0;
    std::size_t N            = 0;
    double trunc_hankel_norm = 0.0;
    double closed_form       = 0.0;
    double cb_norm           = 0.0;
    bool   matches           = false;
  };

  inline PoissonReport poisson_cb_norm(double r, std::size_t N) {
    if (!(r > 0.0 && r < 1.0)) {
      throw InputError("Poisson radius must lie in (0, 1)");
    }
    SymbolSeq s(2 * N);
    for (std::size_t n = 0; n < s.size(); ++n) {
      s[n] = std::pow(r, 2.0 * static_cast<double>(n));
    }
    PoissonReport rep;
    rep.r                 = r;
    rep.N                 = N;
    rep.trunc_hankel_norm = spectral_norm(hankel_matrix(s, N));
    double const r4       = std::pow(r, 4.0);
    rep.closed_form       = (1.0 - std::pow(r, 4.0 * static_cast<double>(N))) / (1.0 - r4);
    rep.cb_norm           = 1.0 / std::sqrt(1.0 - r4);
    rep.matches           = std::abs(rep.trunc_hankel_norm - rep.closed_form) <= 1e-10;
    return rep;
  }

  // ||[a_{i+j} b_{i+j}]|| <= ||[|a_{i+j}|^p]||^{1/p} ||[|b_{i+j}|^q]||^{1/q};
  // p = 1 pairs with sup |b| and p = inf with sup |a|.
  inline InequalityReport hankel_holder_check(SymbolSeq const& a,
                                              SymbolSeq const& b,
                                              double           p,
                                              std::size_t      N) {
    if (!(p >= 1.0)) {
      throw InputError("Hoelder exponent must be in [1, inf]");
    }
    SymbolSeq ab(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < ab.size(); ++i) {
      ab[i] = (i < a.size() ? a[i] : 0.0) * (i < b.size() ? b[i] : 0.0);
    }
    double const lhs = spectral_norm(hankel_matrix(ab, N));
    auto trunc = [&](SymbolSeq const& s) {
      return SymbolSeq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(std::min(s.size(), 2 * N - 1)));
    };
    double rhs;
    double q;
    if (p == 1.0) {
      q   = std::numeric_limits<double>::infinity();
      rhs = bmoa_p_trunc(a, 1.0, N) * detail::sup_abs(trunc(b));
    } else if (std::isinf(p)) {
      q   = 1.0;
      rhs = detail::sup_abs(trunc(a)) * bmoa_p_trunc(b, 1.0, N);
    } else {
      q   = p / (p - 1.0);
      rhs = bmoa_p_trunc(a, p, N) * bmoa_p_trunc(b, q, N);
    }
    auto rep      = detail::finish(lhs, rhs, 1e-9 * std::max(1.0, rhs));
    rep.params    = {{"p", p}, {"q", q}, {"N", static_cast<double>(N)}};
    return rep;
  }

  // Equispaced mean of ||f(theta_j)||.
  inline double h1_norm_quadrature(VectorSymbolSeq const& f, std::size_t n_nodes) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_nodes; ++j) {
      double const theta = 2.0 * std::numbers::pi * static_cast<double>(j)
                           / static_cast<double>(n_nodes);
      DenseVector v = DenseVector::Zero(static_cast<Eigen::Index>(f.dim));
      for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
        v += f.coeffs[n] * std::polar(1.0, theta * static_cast<double>(n));
      }
      acc += v.norm();
    }
    return acc / static_cast<double>(n_nodes);
  }

  // ||(phi(n) f(n))_n||_{S_{4/3}} <= ||phi||_{BMOA^(2)} ||f||_{H^1(l^2)}.
  inline InequalityReport fourier_schur_check(SymbolSeq const&        phi,
                                              VectorSymbolSeq const&  f,
                                              QuadratureConfig const& quad) {
    if (f.dim < 1) {
      throw InputError("vector symbol needs dimension >= 1");
    }
    for (auto const& v : f.coeffs) {
      if (static_cast<std::size_t>(v.size()) != f.dim) {
        throw InputError("vector symbol coefficient has the wrong dimension");
      }
    }
    std::size_t const max_freq = f.coeffs.empty() ? 0 : f.coeffs.size() - 1;
    if (quad.n_nodes <= 2 * max_freq) {
      throw InputError("quadrature needs more than 2 * (max frequency) nodes");
    }
    std::size_t const K = std::max<std::size_t>(1, std::min(phi.size(), f.coeffs.size()));
    DenseMatrix       cols = DenseMatrix::Zero(static_cast<Eigen::Index>(f.dim),
                                         static_cast<Eigen::Index>(K));
    for (std::size_t n = 0; n < std::min(phi.size(), f.coeffs.size()); ++n) {
      cols.col(static_cast<Eigen::Index>(n)) = phi[n] * f.coeffs[n];
    }
    double const lhs = schatten_norm(cols, 4.0 / 3.0);
    std::size_t const deg = phi.empty() ? 0 : phi.size() - 1;
    double const bmoa2 = phi.empty() ? 0.0 : bmoa_p_trunc(phi, 2.0, 2 * deg + 1);
    double const h1    = h1_norm_quadrature(f, quad.n_nodes);
    double       err   = 0.0;
    if (quad.error_estimate) {
      std::size_t half = std::max<std::size_t>(quad.n_nodes / 2, 2 * max_freq + 1);
      err              = std::abs(h1 - h1_norm_quadrature(f, half));
    }
    auto rep   = detail::finish(lhs, bmoa2 * h1, bmoa2 * err + 1e-9 * std::max(1.0, bmoa2 * h1));
    rep.params = {{"bmoa2", bmoa2},
                  {"h1_norm", h1},
                  {"quadrature_error", err},
                  {"n_nodes", static_cast<double>(quad.n_nodes)}};
    return rep;
  }

  inline Complex inner(SymbolSeq const& f, SymbolSeq const& g) {
    Complex s = 0.0;
    for (std::size_t n = 0; n < std::min(f.size(), g.size()); ++n) {
      s += f[n] * std::conj(g[n]);
    }
    return s;
  }

  // ||sum_k G_k^* G_k||^{1/2} <= ||[|phi(i+j)|^2]||^{1/2} (sum_{k,l} |<f_k, f_l>|^2)^{1/4}
  // with G_k the Hankel matrix of f_k(n) phi(n).
  inline InequalityReport s4_hankel_check(SymbolSeq const&              phi,
                                          std::vector<SymbolSeq> const& f_family) {
    std::size_t maxdeg = phi.empty() ? 0 : phi.size() - 1;
    for (auto const& f : f_family) {
      maxdeg = std::max(maxdeg, f.empty() ? 0 : f.size() - 1);
    }
    std::size_t const N   = 2 * maxdeg + 1;
    DenseMatrix       sum = DenseMatrix::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (auto const& f : f_family) {
      SymbolSeq g(std::min(f.size(), phi.size()));
      for (std::size_t n = 0; n < g.size(); ++n) {
        g[n] = f[n] * phi[n];
      }
      DenseMatrix G = hankel_matrix(g, N);
      sum += G.adjoint() * G;
    }
    double const lhs = std::sqrt(spectral_norm(sum));
    double const phi_part
        = std::sqrt(spectral_norm(hankel_matrix(detail::abs_pow(phi, 2.0), N)));
    double gram = 0.0;
    for (auto const& f : f_family) {
      for (auto const& g : f_family) {
        gram += std::norm(inner(f, g));
      }
    }
    double const rhs = phi_part * std::pow(gram, 0.25);
    auto         rep = detail::finish(lhs, rhs, 1e-9 * std::max(1.0, rhs));
    rep.params       = {{"gram", gram}, {"phi_factor", phi_part}, {"N", static_cast<double>(N)}};
    return rep;
  }

}  // namespace lunar

#endif  // LUNAR_HARDY_HPP_
