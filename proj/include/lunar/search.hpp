// lunar-lab: exhaustive search over small coordinatewise-injective tables.
#ifndef LUNAR_SEARCH_HPP_
#define LUNAR_SEARCH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lunar/errors.hpp"
#include "lunar/hankel_system.hpp"
#include "lunar/lunar_check.hpp"
#include "lunar/map_table.hpp"
#include "lunar/sap.hpp"

namespace lunar {

  using Grid = std::vector<std::size_t>;  // row-major label indices

  struct SearchConfig {
    std::size_t   rows   = 3;
    std::size_t   cols   = 3;
    std::size_t   labels = 5;
    std::size_t   budget = 1000;  // raw candidates examined
    std::size_t   cursor = 0;     // raw candidates skipped
    std::uint64_t seed   = 0;
    std::size_t   samples = 50;
    std::vector<std::size_t> dims{1, 2};
  };

  struct SearchEntry {
    Grid        grid;
    std::size_t index = 0;  // raw enumeration index
    bool        lunar = false;
    SapVerdict  verdict = SapVerdict::consistent;
    double      kappa_lb = 1.0;
  };

  struct SearchReport {
    SearchConfig             config;
    std::size_t              cursor_end = 0;
    bool                     exhausted  = false;
    std::size_t              n_examined = 0;
    std::vector<SearchEntry> entries;     // canonical tables met
    std::vector<std::size_t> flagged;     // lunar but SAP-falsified
    std::vector<std::size_t> candidates;  // non-lunar but SAP-consistent
  };

  // Relabels by first appearance in row-major order.
  inline Grid relabel(Grid const& g) {
    std::vector<std::size_t> map(g.size() + 1, static_cast<std::size_t>(-1));
    std::size_t              next = 0;
    Grid                     out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (map[g[i]] == static_cast<std::size_t>(-1)) {
        map[g[i]] = next++;
      }
      out[i] = map[g[i]];
    }
    return out;
  }

  // Lexicographically least grid over row permutations, column
  // permutations and label renamings.
  inline Grid canonical_grid(Grid const& g, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), std::size_t{0});
    Grid best;
    Grid cur(g.size());
    do {
      std::iota(cp.begin(), cp.end(), std::size_t{0});
      do {
        for (std::size_t i = 0; i < rows; ++i) {
          for (std::size_t j = 0; j < cols; ++j) {
            cur[i * cols + j] = g[rp[i] * cols + cp[j]];
          }
        }
        auto c = relabel(cur);
        if (best.empty() || c < best) {
          best = std::move(c);
        }
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return best;
  }

  inline MapTable grid_table(Grid const& g, std::size_t rows, std::size_t cols) {
    std::vector<std::string> rn, cn;
    for (std::size_t i = 0; i < rows; ++i) {
      rn.push_back(std::to_string(i));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      cn.push_back(std::to_string(j));
    }
    return MapTable::from_function(
        rn, cn, [&](std::size_t a, std::size_t x) { return "L" + std::to_string(g[a * cols + x]); },
        "search");
  }

  namespace detail {
    // Depth-first over cells; labels in first-appearance form, rows and
    // columns injective.  visit(grid) returns false to stop.
    template <typename Visit>
    bool enumerate_grids(Grid& g, std::size_t pos, std::size_t used, SearchConfig const& cfg,
                         Visit&& visit) {
      if (pos == g.size()) {
        return visit(g);
      }
      std::size_t const i = pos / cfg.cols, j = pos % cfg.cols;
      for (std::size_t l = 0; l <= std::min(used, cfg.labels - 1); ++l) {
        bool ok = true;
        for (std::size_t k = 0; k < j && ok; ++k) {
          ok = g[i * cfg.cols + k] != l;
        }
        for (std::size_t k = 0; k < i && ok; ++k) {
          ok = g[k * cfg.cols + j] != l;
        }
        if (!ok) {
          continue;
        }
        g[pos] = l;
        if (!enumerate_grids(g, pos + 1, std::max(used, l + 1), cfg, visit)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  inline SearchReport search_tables(SearchConfig const& cfg) {
    if (cfg.rows < 1 || cfg.cols < 1 || cfg.labels < 1) {
      throw InputError("search needs rows, cols and labels >= 1");
    }
    if (cfg.rows > 5 || cfg.cols > 5) {
      throw InputError("search is limited to 5 x 5 tables");
    }
    SearchReport rep;
    rep.config = cfg;
    Grid        g(cfg.rows * cfg.cols, 0);
    std::size_t index = 0;
    SapConfig   probe;
    probe.n_samples = cfg.samples;
    probe.dims      = cfg.dims;
    probe.seed      = cfg.seed;

    bool const finished = detail::enumerate_grids(g, 0, 0, cfg, [&](Grid const& grid) {
      std::size_t const here = index++;
      if (here < cfg.cursor) {
        return true;
      }
      if (rep.n_examined == cfg.budget) {
        --index;
        return false;
      }
      ++rep.n_examined;
      if (canonical_grid(grid, cfg.rows, cfg.cols) != grid) {
        return true;
      }
      SearchEntry e;
      e.grid       = grid;
      e.index      = here;
      auto table   = grid_table(grid, cfg.rows, cfg.cols);
      e.lunar      = check_lunar(table, LunarMethod::fast).is_lunar;
      auto sap     = sap_probe(build_hankel_system(table), probe);
      e.verdict    = sap.verdict;
      e.kappa_lb   = sap.kappa_lower_bound;
      if (e.lunar && e.verdict == SapVerdict::falsified) {
        rep.flagged.push_back(rep.entries.size());
      }
      if (!e.lunar && e.verdict == SapVerdict::consistent) {
        rep.candidates.push_back(rep.entries.size());
      }
      rep.entries.push_back(std::move(e));
      return true;
    });
    rep.exhausted  = finished;
    rep.cursor_end = index;
    return rep;
  }

}  // namespace lunar

#endif  // LUNAR_SEARCH_HPP_
