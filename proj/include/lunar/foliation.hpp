// lunar-lab: Sol sets, coupled foliations, intertwiners and the exact
// block-diagonalization identities for Gamma_l (x) Gamma_l.
#ifndef LUNAR_FOLIATION_HPP_
#define LUNAR_FOLIATION_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lunar/boolean_op.hpp"
#include "lunar/errors.hpp"
#include "lunar/hankel_system.hpp"
#include "lunar/int_matrix.hpp"
#include "lunar/lunar_check.hpp"
#include "lunar/map_table.hpp"

namespace lunar {

  struct SolSet {
    IndexPair              pair;
    std::vector<IndexPair> points;  // lexicographic
  };

  inline SolSet sol_set(MapTable const& table, std::size_t a, std::size_t b) {
    if (a >= table.n_rows() || b >= table.n_rows()) {
      throw InputError("sol_set: row index out of range");
    }
    SolSet s{{a, b}, {}};
    for (std::size_t x = 0; x < table.n_cols(); ++x) {
      for (std::size_t y = 0; y < table.n_cols(); ++y) {
        if (table.at(a, x) == table.at(b, y)) {
          s.points.emplace_back(x, y);
        }
      }
    }
    return s;
  }

  // One equivalence class of pairs with a common non-empty Sol set.
  struct FoliationClass {
    IndexPair              rep;    // smallest member
    std::vector<IndexPair> club;   // members (c, d), lexicographic
    std::vector<IndexPair> spade;  // the shared Sol set, lexicographic
  };

  struct Foliation {
    std::size_t                 n_rows = 0;
    std::size_t                 n_cols = 0;
    std::vector<FoliationClass> classes;  // ordered by representative
    std::vector<IndexPair>      star;     // pairs with empty Sol set
    std::vector<IndexPair>      h_perp;   // points in no Sol set
    std::vector<std::size_t>    class_of_pair;   // a * |A| + b -> class id
    std::vector<std::size_t>    class_of_point;  // x * |X| + y -> class id
    std::optional<std::size_t>  diagonal_class;

    static constexpr std::size_t none = static_cast<std::size_t>(-1);
  };

  namespace detail {
    inline std::vector<std::size_t> flatten(OverlapWitness const& w) {
      return {w.first_rep.first,
              w.first_rep.second,
              w.second_rep.first,
              w.second_rep.second,
              w.point.first,
              w.point.second};
    }

    inline void require_lunar(MapTable const& table) {
      auto rep = check_lunar(table, LunarMethod::fast);
      if (rep.is_lunar) {
        return;
      }
      if (rep.injectivity) {
        auto const& d = *rep.injectivity;
        auto const& w = d.bad_row ? *d.bad_row : *d.bad_col;
        throw NotLunar(std::string("table is not coordinatewise injective (repeat in ")
                           + (d.bad_row ? "row " : "column ")
                           + std::to_string(w.index) + ")",
                       {w.index, w.first, w.second});
      }
      auto const& w = *rep.overlap_witness;
      throw NotLunar("Sol sets of (" + std::to_string(w.first_rep.first) + ","
                         + std::to_string(w.first_rep.second) + ") and ("
                         + std::to_string(w.second_rep.first) + ","
                         + std::to_string(w.second_rep.second)
                         + ") overlap without being equal",
                     flatten(w));
    }
  }  // namespace detail

  inline Foliation build_foliation(MapTable const& table) {
    detail::require_lunar(table);
    SolTable const    sols(table);
    std::size_t const n = table.n_rows(), m = table.n_cols();
    Foliation         f;
    f.n_rows = n;
    f.n_cols = m;
    f.class_of_pair.assign(n * n, Foliation::none);
    f.class_of_point.assign(m * m, Foliation::none);

    std::unordered_map<std::vector<std::size_t>, std::size_t, detail::VectorHash>
        id_of;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto const& s = sols.sol(a, b);
        if (s.empty()) {
          f.star.emplace_back(a, b);
          continue;
        }
        auto [it, fresh] = id_of.emplace(s, f.classes.size());
        if (fresh) {
          FoliationClass c;
          c.rep = {a, b};
          for (std::size_t p : s) {
            c.spade.push_back(sols.decode(p));
            if (f.class_of_point[p] != Foliation::none) {
              throw InvariantViolation("spade leaves overlap in a lunar table");
            }
            f.class_of_point[p] = f.classes.size();
          }
          f.classes.push_back(std::move(c));
        }
        f.classes[it->second].club.emplace_back(a, b);
        f.class_of_pair[a * n + b] = it->second;
      }
    }
    for (std::size_t p = 0; p < m * m; ++p) {
      if (f.class_of_point[p] == Foliation::none) {
        f.h_perp.push_back(sols.decode(p));
      }
    }
    if (f.class_of_pair[0] != Foliation::none) {
      auto const& c    = f.classes[f.class_of_pair[0]];
      bool        diag = c.spade.size() == m && c.club.size() == n;
      for (std::size_t i = 0; diag && i < m; ++i) {
        diag = c.spade[i] == IndexPair{i, i};
      }
      for (std::size_t i = 0; diag && i < n; ++i) {
        diag = c.club[i] == IndexPair{i, i};
      }
      if (diag) {
        f.diagonal_class = f.class_of_pair[0];
      }
    }
    return f;
  }

  // Groups of X^2 points (x, y) with the same set of pairs (a, b) such that
  // Phi(a, x) = Phi(b, y); points with no such pair are omitted.
  inline std::vector<std::vector<IndexPair>> dual_leaves(MapTable const& table) {
    std::size_t const n = table.n_rows(), m = table.n_cols();
    std::map<std::vector<std::size_t>, std::vector<IndexPair>> groups;
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        std::vector<std::size_t> key;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (table.at(a, x) == table.at(b, y)) {
              key.push_back(a * n + b);
            }
          }
        }
        if (!key.empty()) {
          groups[key].emplace_back(x, y);
        }
      }
    }
    std::vector<std::vector<IndexPair>> out;
    for (auto& [k, v] : groups) {
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  struct IntertwinerPair {
    std::size_t class_id = 0;
    BooleanOp   P;  // |X| x |spade|, e_x (x) e_y -> e_x
    BooleanOp   Q;  // |club| x |A|,  e_c -> e_c (x) e_d
    // Diagonal class only: U = P on the diagonal, V = Q^{-1}.
    std::optional<BooleanOp> U;
    std::optional<BooleanOp> V;
  };

  inline IntertwinerPair build_intertwiners(MapTable const&  table,
                                            Foliation const& f,
                                            std::size_t      class_id) {
    if (class_id >= f.classes.size()) {
      throw InputError("class id " + std::to_string(class_id) + " out of range");
    }
    auto const&        c = f.classes[class_id];
    std::vector<Entry> p, q;
    for (std::size_t j = 0; j < c.spade.size(); ++j) {
      p.emplace_back(c.spade[j].first, j);
    }
    std::vector<bool> seen(table.n_rows(), false);
    for (std::size_t i = 0; i < c.club.size(); ++i) {
      auto first = c.club[i].first;
      if (seen[first]) {
        throw InvariantViolation("club has two partners for row "
                                 + std::to_string(first));
      }
      seen[first] = true;
      q.emplace_back(i, first);
    }
    IntertwinerPair out{class_id,
                        BooleanOp(table.n_cols(), c.spade.size(), std::move(p)),
                        BooleanOp(c.club.size(), table.n_rows(), std::move(q)),
                        std::nullopt,
                        std::nullopt};
    if (!out.P.certified() || !out.Q.certified()) {
      throw InvariantViolation("intertwiner without a partial-permutation certificate");
    }
    if (f.diagonal_class == class_id) {
      out.U = out.P;
      out.V = adjoint(out.Q);
    }
    return out;
  }

  struct DiagramCheck {
    std::string kind;   // kernel | range | diagonal | intertwining | ...
    std::string label;  // label name or Gamma index
    std::string block;  // class representative or subspace name
    bool        pass = false;
  };

  struct DiagramReport {
    std::vector<DiagramCheck> checks;

    [[nodiscard]] std::size_t n_failed() const {
      return static_cast<std::size_t>(std::count_if(
          checks.begin(), checks.end(), [](auto const& c) { return !c.pass; }));
    }
    [[nodiscard]] bool all_pass() const {
      return n_failed() == 0;
    }
  };

  namespace detail {
    inline std::string pair_name(IndexPair p) {
      return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    }

    inline std::vector<std::size_t> encode(std::vector<IndexPair> const& v,
                                           std::size_t                   width) {
      std::vector<std::size_t> out;
      out.reserve(v.size());
      for (auto [i, j] : v) {
        out.push_back(i * width + j);
      }
      return out;
    }

    // Rows of m restricted to the listed indices, re-indexed in list order.
    inline IntMatrix select_rows(IntMatrix const& m, std::vector<std::size_t> const& rows) {
      return transpose(IntMatrix::embedding(m.n_rows(), rows)) * m;
    }
  }  // namespace detail

  // Every identity of the block-diagonalization, checked with exact integer
  // matrices, for every label and every class.
  inline DiagramReport verify_absorption_diagrams(MapTable const& table) {
    auto const        f      = build_foliation(table);
    auto const        system = build_hankel_system(table);
    std::size_t const n = table.n_rows(), m = table.n_cols();
    std::size_t const nn = n * n, mm = m * m;

    std::vector<IntertwinerPair> tw;
    std::vector<IntMatrix>       spade_in, club_in;
    for (std::size_t k = 0; k < f.classes.size(); ++k) {
      tw.push_back(build_intertwiners(table, f, k));
      spade_in.push_back(IntMatrix::embedding(mm, detail::encode(f.classes[k].spade, m)));
      club_in.push_back(IntMatrix::embedding(nn, detail::encode(f.classes[k].club, n)));
    }
    auto const perp_in = IntMatrix::embedding(mm, detail::encode(f.h_perp, m));

    DiagramReport report;
    for (std::size_t l = 0; l < system.size(); ++l) {
      auto const& name  = system.label_name(l);
      auto const  gamma = IntMatrix::from_boolean(system.ops()[l]);
      auto const  gg    = kron(gamma, gamma);

      report.checks.push_back({"kernel", name, "h_perp", (gg * perp_in).is_zero()});

      for (std::size_t k = 0; k < f.classes.size(); ++k) {
        auto const& cls   = f.classes[k];
        auto const  block = detail::pair_name(cls.rep);
        auto const  lhs   = gg * spade_in[k];

        // Range inside K[a,b]: nothing outside the club rows.
        auto const inside = club_in[k] * detail::select_rows(lhs, detail::encode(cls.club, n));
        report.checks.push_back({"range", name, block, inside == lhs});

        auto const P   = IntMatrix::from_boolean(tw[k].P);
        auto const Q   = IntMatrix::from_boolean(tw[k].Q);
        auto const rhs = club_in[k] * (Q * (gamma * P));
        report.checks.push_back({"intertwining", name, block, lhs == rhs});

        if (f.diagonal_class == k) {
          auto const U = IntMatrix::from_boolean(*tw[k].U);
          auto const V = IntMatrix::from_boolean(*tw[k].V);
          auto const restricted
              = detail::select_rows(lhs, detail::encode(cls.club, n));
          report.checks.push_back({"diagonal", name, block, V * restricted == gamma * U});
        }
      }
    }
    return report;
  }

  // The N-window construction: H_k, U, W_{+-k}, V_{+-k} on {0..n-1}, and
  // the factorization Gamma_j (x) Gamma_j = V F R_U(Gamma_j) W for j < n.
  inline DiagramReport verify_nat_factorization(std::size_t n_window) {
    if (n_window < 2) {
      throw InputError("verify_nat_factorization needs a window of size >= 2");
    }
    auto const        n  = static_cast<std::ptrdiff_t>(n_window);
    std::size_t const nn = n_window * n_window;
    auto idx = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
      return static_cast<std::size_t>(i * n + j);
    };
    // Basis of H_k in increasing order of the smaller coordinate.
    auto basis = [&](std::ptrdiff_t k) {
      std::vector<std::size_t> b;
      for (std::ptrdiff_t i = 0; i + (k < 0 ? -k : k) < n; ++i) {
        b.push_back(k >= 0 ? idx(i, i + k) : idx(i - k, i));
      }
      return b;
    };
    std::ptrdiff_t const        n_blocks = 2 * n - 1;
    std::vector<IntMatrix>      J, W, V;  // indexed by k + n - 1
    for (std::ptrdiff_t k = -(n - 1); k <= n - 1; ++k) {
      std::ptrdiff_t const  a = k < 0 ? -k : k;
      J.push_back(IntMatrix::embedding(nn, basis(k)));
      std::vector<IntEntry> w, v;
      for (std::ptrdiff_t i = 0; i + a < n; ++i) {
        // W_k: e_i (x) e_{i+k} -> e_{i+k} (x) e_{i+k}, likewise for -k.
        w.push_back({static_cast<std::size_t>(i + a), static_cast<std::size_t>(i), 1});
      }
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        // V_k: e_i (x) e_i -> e_i (x) e_{i+k}; zero once it leaves the window.
        if (i + a < n) {
          v.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(i), 1});
        }
      }
      W.push_back(IntMatrix(n_window, n_window - a, std::move(w)));
      V.push_back(IntMatrix(n_window - a, n_window, std::move(v)));
    }
    auto const& J0 = J[n - 1];
    std::vector<IntEntry> u;
    for (std::size_t i = 0; i < n_window; ++i) {
      u.push_back({i, i, 1});
    }
    IntMatrix const U(n_window, n_window, u);  // H_0 -> l^2 in the H_0 basis
    auto const      U_inv = transpose(U);

    // Global operators on X^2 = (+)_k H_k and on the block space (+)_k H_0.
    std::vector<IntMatrix> w_blocks, v_blocks;
    for (std::ptrdiff_t b = 0; b < n_blocks; ++b) {
      w_blocks.push_back(W[b] * transpose(J[b]));
      v_blocks.push_back(J[b] * V[b]);
    }
    std::vector<IntEntry> w_all, v_all, flip;
    for (std::ptrdiff_t b = 0; b < n_blocks; ++b) {
      for (auto const& e : w_blocks[b].entries()) {
        w_all.push_back({static_cast<std::size_t>(b) * n_window + e.row, e.col, e.value});
      }
      for (auto const& e : v_blocks[b].entries()) {
        v_all.push_back({e.row, static_cast<std::size_t>(b) * n_window + e.col, e.value});
      }
      for (std::size_t i = 0; i < n_window; ++i) {
        flip.push_back({static_cast<std::size_t>(n_blocks - 1 - b) * n_window + i,
                        static_cast<std::size_t>(b) * n_window + i,
                        1});
      }
    }
    std::size_t const big = static_cast<std::size_t>(n_blocks) * n_window;
    IntMatrix const   Wg(big, nn, std::move(w_all));
    IntMatrix const   Vg(nn, big, std::move(v_all));
    IntMatrix const   Fg(big, big, std::move(flip));

    DiagramReport report;
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      std::vector<IntEntry> g;
      for (std::ptrdiff_t i = 0; i <= j; ++i) {
        g.push_back({static_cast<std::size_t>(j - i), static_cast<std::size_t>(i), 1});
      }
      IntMatrix const   gamma(n_window, n_window, std::move(g));
      auto const        gg    = kron(gamma, gamma);
      std::string const label = std::to_string(j);

      auto const r_block = U_inv * gamma * U;
      report.checks.push_back({"diag-invariance", label, "H_0", gg * J0 == J0 * r_block});

      for (std::ptrdiff_t k = -(n - 1); k <= n - 1; ++k) {
        auto const b   = k + n - 1;
        auto const lhs = gg * J[b];
        auto const rhs = J[n - 1 - k] * V[n - 1 - k] * r_block * W[b];
        report.checks.push_back({"block-intertwining", label, "H_" + std::to_string(k), lhs == rhs});
      }

      std::vector<IntMatrix> r_blocks(static_cast<std::size_t>(n_blocks), r_block);
      auto const rhs = Vg * Fg * direct_sum(r_blocks) * Wg;
      report.checks.push_back({"global-factorization", label, "X^2", gg == rhs});
    }
    return report;
  }

}  // namespace lunar

#endif  // LUNAR_FOLIATION_HPP_
