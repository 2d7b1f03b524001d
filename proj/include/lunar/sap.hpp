// lunar-lab: self-absorption probes, the restricted equality for Boolean
// families, and trace words.
#ifndef LUNAR_SAP_HPP_
#define LUNAR_SAP_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "lunar/boolean_op.hpp"
#include "lunar/dense.hpp"
#include "lunar/errors.hpp"
#include "lunar/hankel_system.hpp"
#include "lunar/tensor_norm.hpp"

namespace lunar {

  enum class SapVerdict { consistent, falsified };

  inline std::string to_string(SapVerdict v) {
    return v == SapVerdict::consistent ? "consistent-with-SAP" : "SAP-falsified";
  }

  struct SapConfig {
    std::size_t              n_samples = 200;
    std::vector<std::size_t> dims{1, 2};
    std::uint64_t            seed             = 0;
    bool                     include_identity = false;
    std::size_t              subset_trials    = 0;
    double                   tol              = 1e-6;
  };

  struct SapSample {
    std::uint64_t seed  = 0;  // per-sample generator seed
    std::string   kind;       // random | fixed
    std::size_t   trial = 0;  // 0 = full system, t = t-th compression
    std::vector<std::size_t> rows, cols;  // compression subsets, empty for trial 0
    CoeffFamily   coeffs;
    double        plain  = 0.0;
    double        tensor = 0.0;
    double        ratio  = 1.0;
    std::optional<std::string> error;
  };

  struct SapReport {
    double                   plain_norm        = 0.0;  // of the extreme sample
    double                   tensor_norm       = 0.0;
    double                   ratio             = 1.0;
    double                   kappa_lower_bound = 1.0;
    std::vector<SapSample>   samples;
    std::vector<std::size_t> witnesses;  // indices into samples
    SapVerdict               verdict = SapVerdict::consistent;
    double                   tol     = 1e-6;
    std::uint64_t            seed    = 0;
    std::vector<std::size_t> dims;
    std::size_t              n_errors = 0;
  };

  namespace detail {

    inline std::size_t thread_count() {
      if (char const* env = std::getenv("LUNAR_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) {
          return static_cast<std::size_t>(n);
        }
      }
      return 1;
    }

    // Runs f(i) for i < n, results land at index i whatever the schedule.
    template <typename F>
    void parallel_for(std::size_t n, F&& f) {
      std::size_t const t = std::min(thread_count(), std::max<std::size_t>(n, 1));
      if (t <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          f(i);
        }
        return;
      }
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < n; i += t) {
            f(i);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }

    inline DenseMatrix gaussian_block(std::size_t d, std::mt19937_64& rng) {
      std::normal_distribution<double> g(0.0, std::sqrt(0.5));
      DenseMatrix                      c(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (Eigen::Index i = 0; i < c.rows(); ++i) {
        for (Eigen::Index j = 0; j < c.cols(); ++j) {
          c(i, j) = Complex(g(rng), g(rng));
        }
      }
      return c;
    }

    inline CoeffFamily random_family(HankelSystem const& system,
                                     std::size_t         d,
                                     bool                with_identity,
                                     std::mt19937_64&    rng) {
      CoeffFamily                 f;
      f.dim = d;
      std::bernoulli_distribution coin(0.5);
      for (std::size_t k = 0; k < system.size(); ++k) {
        if (coin(rng)) {
          f.coeffs[system.label_name(k)] = gaussian_block(d, rng);
        }
      }
      if (with_identity && coin(rng)) {
        f.identity_coeff = gaussian_block(d, rng);
      }
      if (f.coeffs.empty() && !f.identity_coeff) {
        std::uniform_int_distribution<std::size_t> pick(0, system.size() - 1);
        f.coeffs[system.label_name(pick(rng))] = gaussian_block(d, rng);
      }
      return f;
    }

    // Deterministic probes: scalars (4, 2, -1) on every ordered triple of
    // distinct labels among the first six, and with the identity enabled
    // (2, -2) on the first two labels plus -1 on the identity.
    inline std::vector<CoeffFamily> fixed_probes(HankelSystem const& system,
                                                 bool                with_identity) {
      std::vector<CoeffFamily> out;
      std::size_t const        k = std::min<std::size_t>(system.size(), 6);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t l = 0; l < k; ++l) {
            if (i == j || j == l || i == l) {
              continue;
            }
            out.push_back(CoeffFamily::scalar({{system.label_name(i), 4.0},
                                               {system.label_name(j), 2.0},
                                               {system.label_name(l), -1.0}}));
          }
        }
      }
      if (with_identity && system.size() >= 2 && system.n_rows() == system.n_cols()) {
        out.push_back(CoeffFamily::scalar(
            {{system.label_name(0), 2.0}, {system.label_name(1), -2.0}}, -1.0));
      }
      return out;
    }

    inline double coeff_scale(CoeffFamily const& f) {
      double s = f.identity_coeff ? f.identity_coeff->norm() : 0.0;
      for (auto const& [k, c] : f.coeffs) {
        s += c.norm();
      }
      return s;
    }

    inline void measure(HankelSystem const& system, SapSample& s) {
      try {
        s.plain  = lincomb_tensor_norm(system, s.coeffs, 1);
        s.tensor = lincomb_tensor_norm(system, s.coeffs, 2);
        double const zero = 1e-9 * std::max(1.0, coeff_scale(s.coeffs));
        if (s.plain <= zero) {
          s.ratio = s.tensor <= zero ? 1.0 : std::numeric_limits<double>::infinity();
        } else {
          s.ratio = s.tensor / s.plain;
        }
      } catch (NumericError const& e) {
        s.error = e.what();
      }
    }

    inline std::vector<std::size_t> random_subset(std::size_t n, std::mt19937_64& rng) {
      std::bernoulli_distribution coin(0.5);
      std::vector<std::size_t>    s;
      for (std::size_t i = 0; i < n; ++i) {
        if (coin(rng)) {
          s.push_back(i);
        }
      }
      if (s.empty()) {
        s.push_back(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
      }
      return s;
    }

    inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
      std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
      z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }
  }  // namespace detail

  // Compares m = 2 against m = 1 on random and fixed coefficient families;
  // with subset_trials > 0 the same budget is spent on random compressions.
  inline SapReport sap_probe(HankelSystem const& system, SapConfig const& cfg) {
    if (cfg.dims.empty()
        || std::any_of(cfg.dims.begin(), cfg.dims.end(), [](auto d) { return d == 0; })) {
      throw InputError("probe dimensions must be positive");
    }
    if (system.size() == 0) {
      throw InputError("empty Hankel system");
    }
    if (!system.all_certified()) {
      throw InputError("system has an operator that is not a partial permutation");
    }

    struct Job {
      HankelSystem const* sys;
      SapSample           sample;
    };
    std::vector<HankelSystem> compressed;
    compressed.reserve(cfg.subset_trials);
    std::vector<std::vector<std::size_t>> sub_rows, sub_cols;
    for (std::size_t t = 1; t <= cfg.subset_trials; ++t) {
      std::mt19937_64 rng(detail::mix(cfg.seed, 1000003 * t));
      sub_rows.push_back(detail::random_subset(system.n_rows(), rng));
      sub_cols.push_back(detail::random_subset(system.n_cols(), rng));
      compressed.push_back(compress_system(system, sub_rows.back(), sub_cols.back()));
    }

    std::vector<Job> jobs;
    for (std::size_t t = 0; t <= cfg.subset_trials; ++t) {
      HankelSystem const& sys = t == 0 ? system : compressed[t - 1];
      for (std::size_t s = 0; s < cfg.n_samples; ++s) {
        SapSample smp;
        smp.seed  = t == 0 ? cfg.seed + s : detail::mix(cfg.seed + s, t);
        smp.kind  = "random";
        smp.trial = t;
        if (t > 0) {
          smp.rows = sub_rows[t - 1];
          smp.cols = sub_cols[t - 1];
        }
        std::mt19937_64 rng(smp.seed);
        smp.coeffs = detail::random_family(
            sys, cfg.dims[s % cfg.dims.size()], cfg.include_identity, rng);
        jobs.push_back({&sys, std::move(smp)});
      }
      for (auto& f : detail::fixed_probes(sys, cfg.include_identity)) {
        SapSample smp;
        smp.kind   = "fixed";
        smp.trial  = t;
        smp.coeffs = std::move(f);
        if (t > 0) {
          smp.rows = sub_rows[t - 1];
          smp.cols = sub_cols[t - 1];
        }
        jobs.push_back({&sys, std::move(smp)});
      }
    }

    detail::parallel_for(jobs.size(), [&](std::size_t i) {
      detail::measure(*jobs[i].sys, jobs[i].sample);
    });

    SapReport rep;
    rep.tol  = cfg.tol;
    rep.seed = cfg.seed;
    rep.dims = cfg.dims;
    std::optional<std::size_t> extreme;
    double                     worst = 1.0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      auto& s = jobs[i].sample;
      if (s.error) {
        ++rep.n_errors;
      } else {
        double k = s.ratio == 0.0 ? std::numeric_limits<double>::infinity()
                                  : std::max(s.ratio, 1.0 / s.ratio);
        if (!extreme || k > worst) {
          extreme = i;
          worst   = k;
        }
        if (s.ratio > 1.0 + cfg.tol || s.ratio < 1.0 - cfg.tol) {
          rep.witnesses.push_back(i);
        }
      }
      rep.samples.push_back(std::move(s));
    }
    if (extreme) {
      auto const& s         = rep.samples[*extreme];
      rep.plain_norm        = s.plain;
      rep.tensor_norm       = s.tensor;
      rep.ratio             = s.ratio;
      rep.kappa_lower_bound = std::max(1.0, worst);
    }
    rep.verdict = rep.witnesses.empty() ? SapVerdict::consistent : SapVerdict::falsified;
    return rep;
  }

  namespace restricted {
    // Entrywise non-negative real coefficients.
    struct NonNegative {
      std::vector<DenseMatrix> c;
    };
    // c_x = b_x (x) conj(b_x).
    struct ConjugateSquare {
      std::vector<DenseMatrix> b;
    };
    // c_x = b_x (x) b_x^*.
    struct AdjointSquare {
      std::vector<DenseMatrix> b;
    };
  }  // namespace restricted

  using RestrictedCoeffs
      = std::variant<restricted::NonNegative, restricted::ConjugateSquare, restricted::AdjointSquare>;

  struct RestrictedReport {
    std::string condition;  // c1 | c2 | c3
    int         m      = 2;
    double      plain  = 0.0;
    double      tensor = 0.0;
    double      rel_diff = 0.0;
    bool        equal    = false;
  };

  namespace detail {
    inline DenseMatrix kron_dense(DenseMatrix const& a, DenseMatrix const& b) {
      DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
          out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
      }
      return out;
    }
  }  // namespace detail

  inline RestrictedReport positivity_restricted_sap_check(std::vector<BooleanOp> const& family,
                                                          RestrictedCoeffs const&       coeffs,
                                                          int                           m) {
    if (m != 2 && m != 3) {
      throw InputError("restricted check uses m = 2 or m = 3");
    }
    for (auto const& op : family) {
      if (!op.certified()) {
        throw InputError("family member is not a partial permutation");
      }
    }
    RestrictedReport         rep;
    rep.m = m;
    std::vector<DenseMatrix> c;
    if (auto const* nn = std::get_if<restricted::NonNegative>(&coeffs)) {
      rep.condition = "c1";
      for (auto const& x : nn->c) {
        if ((x.imag().array() != 0.0).any() || (x.real().array() < 0.0).any()) {
          throw InputError("c1 coefficients must be non-negative reals");
        }
      }
      c = nn->c;
    } else if (auto const* cs = std::get_if<restricted::ConjugateSquare>(&coeffs)) {
      rep.condition = "c2";
      for (auto const& b : cs->b) {
        c.push_back(detail::kron_dense(b, b.conjugate()));
      }
    } else {
      rep.condition = "c3";
      for (auto const& b : std::get<restricted::AdjointSquare>(coeffs).b) {
        if (b.rows() != b.cols()) {
          throw InputError("c3 needs square b_x");
        }
        c.push_back(detail::kron_dense(b, b.adjoint()));
      }
    }
    if (c.size() != family.size()) {
      throw InputError("one coefficient per family member is required");
    }
    std::vector<TensorTerm> terms;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].rows() != c[i].cols()) {
        throw InputError("coefficients must be square");
      }
      terms.push_back({c[i], family[i]});
    }
    rep.plain    = lincomb_tensor_norm(terms, 1);
    rep.tensor   = lincomb_tensor_norm(terms, m);
    double scale = std::max(rep.plain, rep.tensor);
    rep.rel_diff = scale == 0.0 ? 0.0 : std::abs(rep.tensor - rep.plain) / scale;
    rep.equal    = rep.rel_diff <= 1e-8;
    return rep;
  }

  struct TraceWordReport {
    std::size_t                           n_words    = 0;
    std::size_t                           dimension  = 0;
    bool                                  all_closed = true;  // empty or certified
    bool                                  all_in_range = true;
    std::size_t                           max_trace  = 0;
    std::vector<std::vector<std::size_t>> bad_words;  // (s1, t1, s2, t2, ...)
  };

  // Trace of a_{s1}^* a_{t1} ... a_{sn}^* a_{tn} as a Boolean product.
  inline std::size_t trace_of_word(std::vector<BooleanOp> const& family,
                                   std::vector<std::size_t> const& word,
                                   bool*                           closed = nullptr) {
    if (word.empty() || word.size() % 2 != 0) {
      throw InputError("a word lists (sigma, tau) pairs");
    }
    std::optional<BooleanOp> acc;
    bool                     ok = true;
    for (std::size_t i = 0; i < word.size(); i += 2) {
      auto step = compose(adjoint(family.at(word[i])), family.at(word[i + 1]));
      acc       = acc ? compose(*acc, step) : step;
      ok        = ok && (acc->empty() || acc->certified());
    }
    if (closed) {
      *closed = ok;
    }
    return trace(*acc);
  }

  inline TraceWordReport trace_word_check(std::vector<BooleanOp> const& family,
                                          std::size_t                   word_len,
                                          std::size_t                   n_words,
                                          std::uint64_t                 seed) {
    if (family.empty() || word_len == 0) {
      throw InputError("trace words need a non-empty family and length >= 1");
    }
    for (auto const& op : family) {
      if (!op.certified() && !op.empty()) {
        throw InputError("family member is not a partial permutation");
      }
      if (op.n_rows() != family[0].n_rows() || op.n_cols() != family[0].n_cols()) {
        throw InputError("family members must share dimensions");
      }
    }
    TraceWordReport rep;
    rep.n_words   = n_words;
    rep.dimension = family[0].n_cols();
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
    for (std::size_t w = 0; w < n_words; ++w) {
      std::vector<std::size_t> word(2 * word_len);
      for (auto& x : word) {
        x = pick(rng);
      }
      bool        closed = true;
      std::size_t tr     = trace_of_word(family, word, &closed);
      rep.max_trace      = std::max(rep.max_trace, tr);
      bool in_range      = tr <= rep.dimension;
      rep.all_closed     = rep.all_closed && closed;
      rep.all_in_range   = rep.all_in_range && in_range;
      if (!closed || !in_range) {
        rep.bad_words.push_back(word);
      }
    }
    return rep;
  }

}  // namespace lunar

#endif  // LUNAR_SAP_HPP_
