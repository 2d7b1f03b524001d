// lunar-lab: solution sets Sol(a, b) and the (generalized) lunar condition.
#ifndef LUNAR_LUNAR_CHECK_HPP_
#define LUNAR_LUNAR_CHECK_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lunar/map_table.hpp"

namespace lunar {

  using IndexPair = std::pair<std::size_t, std::size_t>;

  namespace detail {
    struct VectorHash {
      std::size_t operator()(std::vector<std::size_t> const& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL ^ v.size();
        for (std::size_t e : v) {
          h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace detail

  // Every Sol(a, b) at once, indexed by a * |A| + b.  Points (x, y) are
  // encoded as x * |X| + y and sorted.  Built by joining the level-set
  // fibers, so the cost is the sum over labels of |fiber|^2.
  class SolTable {
   public:
    explicit SolTable(MapTable const& table)
        : _n_rows(table.n_rows()), _n_cols(table.n_cols()) {
      std::vector<std::vector<IndexPair>> fibers(table.n_labels());
      for (std::size_t a = 0; a < _n_rows; ++a) {
        for (std::size_t x = 0; x < _n_cols; ++x) {
          fibers[table.at(a, x)].emplace_back(a, x);
        }
      }
      _sols.resize(_n_rows * _n_rows);
      for (auto const& fiber : fibers) {
        for (auto [a, x] : fiber) {
          for (auto [b, y] : fiber) {
            _sols[a * _n_rows + b].push_back(x * _n_cols + y);
          }
        }
      }
      for (auto& s : _sols) {
        std::sort(s.begin(), s.end());
      }
    }

    [[nodiscard]] std::vector<std::size_t> const& sol(std::size_t a,
                                                      std::size_t b) const {
      return _sols[a * _n_rows + b];
    }
    [[nodiscard]] std::size_t n_rows() const noexcept {
      return _n_rows;
    }
    [[nodiscard]] std::size_t n_cols() const noexcept {
      return _n_cols;
    }
    [[nodiscard]] IndexPair decode(std::size_t point) const noexcept {
      return {point / _n_cols, point % _n_cols};
    }

   private:
    std::size_t                           _n_rows;
    std::size_t                           _n_cols;
    std::vector<std::vector<std::size_t>> _sols;
  };

  enum class LunarMethod { fast, brute };

  inline std::string_view to_string(LunarMethod m) noexcept {
    return m == LunarMethod::fast ? "fast" : "brute";
  }

  // (a, b, c, d, x, y, z, w) with Phi(a,x) = Phi(b,y), Phi(c,x) = Phi(d,y),
  // Phi(a,z) = Phi(b,w) and Phi(c,z) != Phi(d,w).
  struct LunarWitness {
    std::size_t a, b, c, d, x, y, z, w;

    friend bool operator==(LunarWitness const&, LunarWitness const&) = default;
  };

  // Two distinct Sol sets, named by their class representatives, that share
  // the point (x, y).
  struct OverlapWitness {
    IndexPair first_rep;
    IndexPair second_rep;
    IndexPair point;

    friend bool operator==(OverlapWitness const&, OverlapWitness const&)
        = default;
  };

  struct LunarReport {
    bool                          is_lunar = false;
    std::optional<LunarWitness>   witness;
    std::optional<OverlapWitness> overlap_witness;
    // Present when the table is not coordinatewise injective.
    std::optional<TableDiagnostics> injectivity;
    LunarMethod                     method = LunarMethod::fast;
    // A positive verdict only speaks for the finite window that was checked;
    // a witness against the condition also refutes every ambient map.
    bool window_local = false;
  };

  namespace detail {

    inline std::optional<OverlapWitness> overlap_scan(SolTable const& sols) {
      std::size_t const n  = sols.n_rows();
      std::size_t const np = sols.n_cols() * sols.n_cols();
      std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash>
                               group_of;
      std::vector<std::size_t> reps;  // group id -> encoded representative
      std::vector<std::size_t> owner(np, static_cast<std::size_t>(-1));
      bool                     clash = false;
      for (std::size_t ab = 0; ab < n * n; ++ab) {
        auto const& s = sols.sol(ab / n, ab % n);
        if (s.empty()) {
          continue;
        }
        auto [it, fresh] = group_of.emplace(s, reps.size());
        if (fresh) {
          reps.push_back(ab);
          for (std::size_t p : s) {
            if (owner[p] != static_cast<std::size_t>(-1)) {
              clash = true;
            } else {
              owner[p] = it->second;
            }
          }
        }
      }
      if (!clash) {
        return std::nullopt;
      }
      // Smallest (rep, rep') over points shared by two groups; at a fixed
      // point that is the two smallest representatives containing it.
      std::vector<std::vector<std::size_t>> at_point(np);
      for (std::size_t g = 0; g < reps.size(); ++g) {
        for (std::size_t p : sols.sol(reps[g] / n, reps[g] % n)) {
          at_point[p].push_back(reps[g]);
        }
      }
      std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> best;
      for (std::size_t p = 0; p < np; ++p) {
        auto& v = at_point[p];
        if (v.size() < 2) {
          continue;
        }
        std::partial_sort(v.begin(), v.begin() + 2, v.end());
        auto cand = std::make_tuple(v[0], v[1], p);
        if (!best || cand < *best) {
          best = cand;
        }
      }
      auto [r1, r2, p] = *best;
      return OverlapWitness{
          {r1 / n, r1 % n}, {r2 / n, r2 % n}, sols.decode(p)};
    }

    // Direct enumeration of the implication in lexicographic order of the
    // octuple; the hypotheses Phi(a,x) = Phi(b,y) and Phi(a,z) = Phi(b,w)
    // are enumerated through Sol(a, b).
    inline std::optional<LunarWitness> brute_scan(MapTable const& t) {
      std::size_t const n = t.n_rows(), m = t.n_cols();
      std::vector<IndexPair> sol;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          sol.clear();
          for (std::size_t x = 0; x < m; ++x) {
            for (std::size_t y = 0; y < m; ++y) {
              if (t.at(a, x) == t.at(b, y)) {
                sol.emplace_back(x, y);
              }
            }
          }
          if (sol.empty()) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t d = 0; d < n; ++d) {
              for (auto [x, y] : sol) {
                if (t.at(c, x) != t.at(d, y)) {
                  continue;
                }
                for (auto [z, w] : sol) {
                  if (t.at(c, z) != t.at(d, w)) {
                    return LunarWitness{a, b, c, d, x, y, z, w};
                  }
                }
              }
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Lunar-map verdict: coordinatewise injectivity plus the generalized lunar
  // condition.  With require_injective = false only the condition itself is
  // tested, which is how the fast and brute methods are compared on
  // arbitrary grids.
  inline LunarReport check_lunar(MapTable const& table,
                                 LunarMethod     method            = LunarMethod::fast,
                                 bool            require_injective = true) {
    LunarReport report;
    report.method = method;
    if (require_injective) {
      auto diag = validate_map(table);
      if (!diag.coordinatewise_injective) {
        report.is_lunar    = false;
        report.injectivity = std::move(diag);
        return report;
      }
    }
    if (method == LunarMethod::fast) {
      report.overlap_witness = detail::overlap_scan(SolTable(table));
      report.is_lunar        = !report.overlap_witness;
    } else {
      report.witness  = detail::brute_scan(table);
      report.is_lunar = !report.witness;
    }
    report.window_local = report.is_lunar;
    return report;
  }

  // The lunar-monoid condition read literally on a multiplication window:
  // (ax = by, cx = dy, az = bw) => cz = dw, with products compared as labels.
  // Rows and columns range over the same window, so this is the lunar
  // condition of the map (s, t) -> st restricted to the window.
  inline bool lunar_monoid_condition(MapTable const& mult_table) {
    if (mult_table.row_labels() != mult_table.col_labels()) {
      throw InputError("lunar monoid condition needs a square window");
    }
    auto const&       t = mult_table;
    std::size_t const n = t.n_rows();
    auto prod = [&](std::size_t s, std::size_t u) -> std::string const& {
      return t.cell_name(s, u);
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (prod(a, x) != prod(b, y)) {
              continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
              for (std::size_t d = 0; d < n; ++d) {
                if (prod(c, x) != prod(d, y)) {
                  continue;
                }
                for (std::size_t z = 0; z < n; ++z) {
                  for (std::size_t w = 0; w < n; ++w) {
                    if (prod(a, z) == prod(b, w) && prod(c, z) != prod(d, w)) {
                      return false;
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
    return true;
  }

}  // namespace lunar

#endif  // LUNAR_LUNAR_CHECK_HPP_
