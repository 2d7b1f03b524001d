// Shared generators and reference computations for the test suites.
#ifndef LUNAR_TESTS_SUPPORT_HPP_
#define LUNAR_TESTS_SUPPORT_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "lunar/lunar.hpp"

namespace lunar::testing {

  inline MapTable random_table(std::mt19937_64& rng,
                               std::size_t      max_rows,
                               std::size_t      max_cols,
                               std::size_t      max_labels) {
    std::uniform_int_distribution<std::size_t> rd(1, max_rows), cd(1, max_cols),
        ld(1, max_labels);
    std::size_t const                          nr = rd(rng), nc = cd(rng), nl = ld(rng);
    std::uniform_int_distribution<std::size_t> pick(0, nl - 1);
    std::vector<std::string>                   rows, cols;
    for (std::size_t i = 0; i < nr; ++i) {
      rows.push_back("r" + std::to_string(i));
    }
    for (std::size_t j = 0; j < nc; ++j) {
      cols.push_back("c" + std::to_string(j));
    }
    std::vector<std::vector<std::string>> grid(nr, std::vector<std::string>(nc));
    for (auto& line : grid) {
      for (auto& cell : line) {
        cell = "L" + std::to_string(pick(rng));
      }
    }
    return MapTable::from_strings(rows, cols, grid, "random");
  }

  // Random coordinatewise-injective table: shuffled labels drawn without
  // repetition per row, retried until columns are injective too.
  inline MapTable random_injective_table(std::mt19937_64& rng,
                                         std::size_t      nr,
                                         std::size_t      nc,
                                         std::size_t      nl) {
    while (true) {
      std::vector<std::vector<std::string>> grid(nr);
      std::vector<std::size_t>              perm(nl);
      for (std::size_t i = 0; i < nl; ++i) {
        perm[i] = i;
      }
      for (auto& line : grid) {
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t j = 0; j < nc; ++j) {
          line.push_back("L" + std::to_string(perm[j]));
        }
      }
      std::vector<std::string> rows, cols;
      for (std::size_t i = 0; i < nr; ++i) {
        rows.push_back("r" + std::to_string(i));
      }
      for (std::size_t j = 0; j < nc; ++j) {
        cols.push_back("c" + std::to_string(j));
      }
      auto cand = MapTable::from_strings(rows, cols, grid, "random-injective");
      if (validate_map(cand).coordinatewise_injective) {
        return cand;
      }
    }
  }

  inline std::vector<std::size_t> random_nonempty_subset(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> s;
    while (s.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() & 1U) {
          s.push_back(i);
        }
      }
    }
    return s;
  }

  // Literal reading of the lunar implication over all octuples.
  inline bool reference_lunar_condition(MapTable const& t) {
    std::size_t const n = t.n_rows(), m = t.n_cols();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d)
            for (std::size_t x = 0; x < m; ++x)
              for (std::size_t y = 0; y < m; ++y)
                for (std::size_t z = 0; z < m; ++z)
                  for (std::size_t w = 0; w < m; ++w)
                    if (t.at(a, x) == t.at(b, y) && t.at(c, x) == t.at(d, y)
                        && t.at(a, z) == t.at(b, w) && t.at(c, z) != t.at(d, w))
                      return false;
    return true;
  }

  inline Eigen::MatrixXcd to_dense(BooleanOp const& op) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(op.n_rows()),
                                                static_cast<Eigen::Index>(op.n_cols()));
    for (auto [r, c] : op.support()) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1.0;
    }
    return m;
  }

  inline Eigen::MatrixXcd kron_ref(Eigen::MatrixXcd const& a, Eigen::MatrixXcd const& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index k = 0; k < b.rows(); ++k)
          for (Eigen::Index l = 0; l < b.cols(); ++l)
            out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
  }

  // sum_t c_t (x) op_t^{(x) m} assembled explicitly, norm from a full SVD.
  inline double reference_tensor_norm(std::vector<TensorTerm> const& terms, int m) {
    Eigen::MatrixXcd acc;
    for (auto const& t : terms) {
      Eigen::MatrixXcd op = to_dense(t.op);
      Eigen::MatrixXcd p  = op;
      for (int k = 1; k < m; ++k) {
        p = kron_ref(p, op);
      }
      Eigen::MatrixXcd term = kron_ref(t.coeff, p);
      acc                   = acc.size() ? Eigen::MatrixXcd(acc + term) : term;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(acc);
    return svd.singularValues()(0);
  }

  inline BooleanOp random_partial_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Entry> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 3 != 0) {
        s.emplace_back(i, perm[i]);
      }
    }
    if (s.empty()) {
      s.emplace_back(0, perm[0]);
    }
    return BooleanOp(n, n, s);
  }

  inline Eigen::MatrixXcd random_complex(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd                 m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j)
        m(i, j) = std::complex<double>(g(rng), g(rng));
    return m;
  }

}  // namespace lunar::testing

#endif  // LUNAR_TESTS_SUPPORT_HPP_
