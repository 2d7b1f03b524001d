// lunar-lab: norms of sum_l c_l (x) Gamma_l^{(x) m} without forming the
// full Kronecker product.
#ifndef LUNAR_TENSOR_NORM_HPP_
#define LUNAR_TENSOR_NORM_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lunar/boolean_op.hpp"
#include "lunar/dense.hpp"
#include "lunar/errors.hpp"
#include "lunar/hankel_system.hpp"

namespace lunar {

  // Coefficients keyed by label name, all dim x dim.
  struct CoeffFamily {
    std::size_t                        dim = 1;
    std::map<std::string, DenseMatrix> coeffs;
    std::optional<DenseMatrix>         identity_coeff;

    static CoeffFamily scalar(std::map<std::string, Complex> const& values,
                              std::optional<Complex>                identity = {}) {
      CoeffFamily f;
      for (auto const& [k, v] : values) {
        f.coeffs[k] = DenseMatrix::Constant(1, 1, v);
      }
      if (identity) {
        f.identity_coeff = DenseMatrix::Constant(1, 1, *identity);
      }
      return f;
    }

    void validate() const {
      if (dim == 0) {
        throw InputError("coefficient dimension must be >= 1");
      }
      bool nonzero = false;
      auto check   = [&](DenseMatrix const& c) {
        if (static_cast<std::size_t>(c.rows()) != dim
            || static_cast<std::size_t>(c.cols()) != dim) {
          throw InputError("coefficient block is not " + std::to_string(dim)
                           + "x" + std::to_string(dim));
        }
        if (!c.allFinite()) {
          throw InputError("coefficient block has non-finite entries");
        }
        nonzero = nonzero || c.norm() > 0.0;
      };
      for (auto const& [k, c] : coeffs) {
        check(c);
      }
      if (identity_coeff) {
        check(*identity_coeff);
      }
      if (!nonzero) {
        throw InputError("coefficient family is identically zero");
      }
    }
  };

  struct TensorTerm {
    DenseMatrix coeff;
    BooleanOp   op;
  };

  namespace detail {

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    inline std::size_t ipow(std::size_t b, int e) {
      std::size_t r = 1;
      for (int i = 0; i < e; ++i) {
        r *= b;
      }
      return r;
    }

    // Support of op^{(x) m} as flattened (row tuple, col tuple), row-major.
    inline std::vector<Entry> tensor_power_support(BooleanOp const& op, int m) {
      std::vector<Entry> cur{{0, 0}};
      for (int k = 0; k < m; ++k) {
        std::vector<Entry> next;
        next.reserve(cur.size() * op.support().size());
        for (auto [r, c] : cur) {
          for (auto [r2, c2] : op.support()) {
            next.emplace_back(r * op.n_rows() + r2, c * op.n_cols() + c2);
          }
        }
        cur = std::move(next);
      }
      return cur;
    }

    // Dense block matrix on the listed row and column tuples.
    inline DenseMatrix assemble(std::size_t                                    d,
                                std::vector<std::size_t> const&                rows,
                                std::vector<std::size_t> const&                cols,
                                std::vector<std::pair<Entry, DenseMatrix const*>> const& entries,
                                std::vector<std::size_t> const&                row_pos,
                                std::vector<std::size_t> const&                col_pos) {
      auto const  di = static_cast<Eigen::Index>(d);
      DenseMatrix out
          = DenseMatrix::Zero(di * static_cast<Eigen::Index>(rows.size()),
                              di * static_cast<Eigen::Index>(cols.size()));
      // Coefficient index outer: row i * |rows| + r.
      auto const nr = static_cast<Eigen::Index>(rows.size());
      auto const nc = static_cast<Eigen::Index>(cols.size());
      for (auto const& [rc, c] : entries) {
        auto r = static_cast<Eigen::Index>(row_pos[rc.first]);
        auto q = static_cast<Eigen::Index>(col_pos[rc.second]);
        for (Eigen::Index i = 0; i < di; ++i) {
          for (Eigen::Index j = 0; j < di; ++j) {
            out(i * nr + r, j * nc + q) += (*c)(i, j);
          }
        }
      }
      return out;
    }
  }  // namespace detail

  // || sum_t coeff_t (x) op_t^{(x) m} ||.  The sparsity pattern of the sum
  // splits into connected components of the bipartite (row tuple, col tuple)
  // graph; the norm is the largest component norm.
  inline double lincomb_tensor_norm(std::vector<TensorTerm> const& terms, int m) {
    if (terms.empty()) {
      throw InputError("empty coefficient family");
    }
    if (m < 1 || m > 3) {
      throw InputError("tensor power must be 1, 2 or 3");
    }
    std::size_t const d  = static_cast<std::size_t>(terms[0].coeff.rows());
    std::size_t const r1 = terms[0].op.n_rows(), c1 = terms[0].op.n_cols();
    for (auto const& t : terms) {
      if (t.op.n_rows() != r1 || t.op.n_cols() != c1) {
        throw InputError("operators in a family must share dimensions");
      }
      if (static_cast<std::size_t>(t.coeff.rows()) != d
          || static_cast<std::size_t>(t.coeff.cols()) != d) {
        throw InputError("coefficient blocks must share one square size");
      }
    }
    std::size_t const R = detail::ipow(r1, m), C = detail::ipow(c1, m);

    std::vector<std::pair<Entry, DenseMatrix const*>> entries;
    for (auto const& t : terms) {
      for (auto e : detail::tensor_power_support(t.op, m)) {
        entries.emplace_back(e, &t.coeff);
      }
    }
    if (entries.empty()) {
      return 0.0;
    }

    if (std::min(d * R, d * C) <= kDenseLimit) {
      std::vector<std::size_t> rows(R), cols(C);
      std::iota(rows.begin(), rows.end(), std::size_t{0});
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      return spectral_norm(detail::assemble(d, rows, cols, entries, rows, cols));
    }

    detail::UnionFind uf(R + C);
    for (auto const& [rc, c] : entries) {
      uf.unite(rc.first, R + rc.second);
    }
    std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
        comps;
    std::vector<bool> touched(R + C, false);
    for (auto const& [rc, c] : entries) {
      touched[rc.first] = touched[R + rc.second] = true;
    }
    for (std::size_t v = 0; v < R + C; ++v) {
      if (touched[v]) {
        auto& comp = comps[uf.find(v)];
        (v < R ? comp.first : comp.second).push_back(v < R ? v : v - R);
      }
    }
    std::map<std::size_t, std::vector<std::pair<Entry, DenseMatrix const*>>> by_comp;
    for (auto const& e : entries) {
      by_comp[uf.find(e.first.first)].push_back(e);
    }
    std::vector<std::size_t> row_pos(R), col_pos(C);
    double                   best = 0.0;
    for (auto const& [root, rc] : comps) {
      auto const& [rows, cols] = rc;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        row_pos[rows[i]] = i;
      }
      for (std::size_t j = 0; j < cols.size(); ++j) {
        col_pos[cols[j]] = j;
      }
      auto const& ents = by_comp[root];
      if (std::min(d * rows.size(), d * cols.size()) <= kDenseLimit) {
        best = std::max(best,
                        spectral_norm(detail::assemble(d, rows, cols, ents, row_pos, col_pos)));
        continue;
      }
      // Matrix-free: x is laid out as x[j * |cols| + q].
      auto const nr = rows.size(), nc = cols.size();
      auto       apply = [&](DenseVector const& x) -> DenseVector {
        DenseVector y = DenseVector::Zero(static_cast<Eigen::Index>(d * nr));
        for (auto const& [e, c] : ents) {
          auto r = row_pos[e.first], q = col_pos[e.second];
          for (std::size_t i = 0; i < d; ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
              acc += (*c)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))
                     * x(static_cast<Eigen::Index>(j * nc + q));
            }
            y(static_cast<Eigen::Index>(i * nr + r)) += acc;
          }
        }
        return y;
      };
      auto apply_adj = [&](DenseVector const& y) -> DenseVector {
        DenseVector x = DenseVector::Zero(static_cast<Eigen::Index>(d * nc));
        for (auto const& [e, c] : ents) {
          auto r = row_pos[e.first], q = col_pos[e.second];
          for (std::size_t j = 0; j < d; ++j) {
            Complex acc = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
              acc += std::conj((*c)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))
                     * y(static_cast<Eigen::Index>(i * nr + r));
            }
            x(static_cast<Eigen::Index>(j * nc + q)) += acc;
          }
        }
        return x;
      };
      best = std::max(best, power_norm(d * nc, apply, apply_adj));
    }
    return best;
  }

  // Hankel-system form: coefficients by label name, optional identity term.
  inline double lincomb_tensor_norm(HankelSystem const& system,
                                    CoeffFamily const&  coeffs,
                                    int                 m) {
    coeffs.validate();
    std::vector<TensorTerm> terms;
    for (auto const& [name, c] : coeffs.coeffs) {
      if (!system.contains(name)) {
        throw InputError("unknown label '" + name + "'");
      }
      auto const& op = system.op(name);
      if (!op.certified()) {
        throw InputError("operator for label '" + name + "' is not a partial permutation");
      }
      terms.push_back({c, op});
    }
    if (coeffs.identity_coeff) {
      if (system.n_rows() != system.n_cols()) {
        throw InputError("identity term needs a square system");
      }
      terms.push_back({*coeffs.identity_coeff, BooleanOp::identity(system.n_rows())});
    }
    return lincomb_tensor_norm(terms, m);
  }

}  // namespace lunar

#endif  // LUNAR_TENSOR_NORM_HPP_
