// lunar-lab: finite two-variable maps Phi: A x X -> L stored as label grids.
#ifndef LUNAR_MAP_TABLE_HPP_
#define LUNAR_MAP_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lunar/errors.hpp"

namespace lunar {

  using LabelId = std::uint32_t;

  // A total map Phi on a finite grid.  Rows index A, columns index X and
  // cell (a, x) holds the interned id of Phi(a, x).  Tables built from
  // strings intern labels in row-major order of first appearance, so two
  // tables with the same string grid are equal as values.
  class MapTable {
   public:
    MapTable(std::vector<std::string> rows,
             std::vector<std::string> cols,
             std::vector<LabelId>     cells,
             std::vector<std::string> label_names,
             std::string              origin = {})
        : _rows(std::move(rows)),
          _cols(std::move(cols)),
          _cells(std::move(cells)),
          _label_names(std::move(label_names)),
          _origin(std::move(origin)) {
      if (_rows.empty() || _cols.empty()) {
        throw InputError("map table needs at least one row and one column");
      }
      if (_cells.size() != _rows.size() * _cols.size()) {
        throw InputError("map table grid has " + std::to_string(_cells.size())
                         + " cells, expected "
                         + std::to_string(_rows.size() * _cols.size()));
      }
      for (LabelId id : _cells) {
        if (id >= _label_names.size()) {
          throw InputError("map table cell holds unknown label id "
                           + std::to_string(id));
        }
      }
      _index.reserve(_label_names.size());
      for (std::size_t i = 0; i < _label_names.size(); ++i) {
        if (!_index.emplace(_label_names[i], static_cast<LabelId>(i)).second) {
          throw InputError("duplicate label name '" + _label_names[i] + "'");
        }
      }
    }

    static MapTable from_strings(std::vector<std::string>                     rows,
                                 std::vector<std::string>                     cols,
                                 std::vector<std::vector<std::string>> const& grid,
                                 std::string origin = {}) {
      if (grid.size() != rows.size()) {
        throw InputError("cell grid has " + std::to_string(grid.size())
                         + " rows, expected " + std::to_string(rows.size()));
      }
      std::vector<LabelId>                     cells;
      std::vector<std::string>                 names;
      std::unordered_map<std::string, LabelId> seen;
      cells.reserve(rows.size() * cols.size());
      for (auto const& line : grid) {
        if (line.size() != cols.size()) {
          throw InputError("cell grid row has " + std::to_string(line.size())
                           + " entries, expected "
                           + std::to_string(cols.size()));
        }
        for (auto const& s : line) {
          auto [it, fresh] = seen.emplace(s, static_cast<LabelId>(names.size()));
          if (fresh) {
            names.push_back(s);
          }
          cells.push_back(it->second);
        }
      }
      return MapTable(std::move(rows),
                      std::move(cols),
                      std::move(cells),
                      std::move(names),
                      std::move(origin));
    }

    // f(a, x) must return the label string of Phi(a, x) for indices a, x.
    template <typename Func>
    static MapTable from_function(std::vector<std::string> rows,
                                  std::vector<std::string> cols,
                                  Func&&                   f,
                                  std::string              origin = {}) {
      std::vector<std::vector<std::string>> grid(rows.size());
      for (std::size_t a = 0; a < rows.size(); ++a) {
        grid[a].reserve(cols.size());
        for (std::size_t x = 0; x < cols.size(); ++x) {
          grid[a].push_back(f(a, x));
        }
      }
      return from_strings(
          std::move(rows), std::move(cols), grid, std::move(origin));
    }

    [[nodiscard]] std::size_t n_rows() const noexcept {
      return _rows.size();
    }
    [[nodiscard]] std::size_t n_cols() const noexcept {
      return _cols.size();
    }
    [[nodiscard]] std::size_t n_labels() const noexcept {
      return _label_names.size();
    }

    [[nodiscard]] LabelId at(std::size_t a, std::size_t x) const {
      return _cells[a * _cols.size() + x];
    }

    [[nodiscard]] std::string const& label_name(LabelId id) const {
      return _label_names.at(id);
    }
    [[nodiscard]] std::string const& cell_name(std::size_t a,
                                               std::size_t x) const {
      return _label_names[at(a, x)];
    }

    [[nodiscard]] std::optional<LabelId>
    find_label(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] std::vector<std::string> const& row_labels() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::vector<std::string> const& col_labels() const noexcept {
      return _cols;
    }
    [[nodiscard]] std::vector<std::string> const& label_names() const noexcept {
      return _label_names;
    }
    [[nodiscard]] std::span<LabelId const> cells() const noexcept {
      return _cells;
    }
    [[nodiscard]] std::string const& origin() const noexcept {
      return _origin;
    }

    // Same grid of label strings; origins are ignored.
    [[nodiscard]] bool same_map(MapTable const& that) const {
      if (_rows != that._rows || _cols != that._cols) {
        return false;
      }
      for (std::size_t i = 0; i < _cells.size(); ++i) {
        if (_label_names[_cells[i]] != that._label_names[that._cells[i]]) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(MapTable const& l, MapTable const& r) {
      return l._rows == r._rows && l._cols == r._cols && l._cells == r._cells
             && l._label_names == r._label_names;
    }

   private:
    std::vector<std::string>                 _rows;
    std::vector<std::string>                 _cols;
    std::vector<LabelId>                     _cells;
    std::vector<std::string>                 _label_names;
    std::string                              _origin;
    std::unordered_map<std::string, LabelId> _index;
  };

  // A repeated label inside one row (index = a, first/second = columns) or
  // inside one column (index = x, first/second = rows).
  struct RepeatWitness {
    std::size_t index;
    std::size_t first;
    std::size_t second;

    friend bool operator==(RepeatWitness const&, RepeatWitness const&)
        = default;
  };

  struct TableDiagnostics {
    bool                         coordinatewise_injective = true;
    std::optional<RepeatWitness> bad_row;
    std::optional<RepeatWitness> bad_col;
    bool                         is_monoid_window = false;
    std::optional<std::size_t>   unit_index;
  };

  namespace detail {
    // Lexicographically first pair (i, j), i < j, of equal labels on a line:
    // i is the smallest first occurrence among repeated labels and j the
    // second occurrence of that label.
    template <typename Get>
    std::optional<std::pair<std::size_t, std::size_t>>
    first_repeat(std::size_t len, std::size_t n_labels, Get&& get) {
      std::vector<std::size_t> first(n_labels, len), second(n_labels, len);
      for (std::size_t j = 0; j < len; ++j) {
        LabelId l = get(j);
        if (first[l] == len) {
          first[l] = j;
        } else if (second[l] == len) {
          second[l] = j;
        }
      }
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t l = 0; l < n_labels; ++l) {
        if (second[l] != len && (!best || first[l] < best->first)) {
          best = std::make_pair(first[l], second[l]);
        }
      }
      return best;
    }
  }  // namespace detail

  // Coordinatewise injectivity, plus unit detection when the table is a
  // window of a monoid (row names equal column names).
  inline TableDiagnostics validate_map(MapTable const& table) {
    TableDiagnostics diag;
    std::size_t const nr = table.n_rows(), nc = table.n_cols();
    for (std::size_t a = 0; a < nr && !diag.bad_row; ++a) {
      auto r = detail::first_repeat(
          nc, table.n_labels(), [&](std::size_t x) { return table.at(a, x); });
      if (r) {
        diag.bad_row = RepeatWitness{a, r->first, r->second};
      }
    }
    for (std::size_t x = 0; x < nc && !diag.bad_col; ++x) {
      auto r = detail::first_repeat(
          nr, table.n_labels(), [&](std::size_t a) { return table.at(a, x); });
      if (r) {
        diag.bad_col = RepeatWitness{x, r->first, r->second};
      }
    }
    diag.coordinatewise_injective = !diag.bad_row && !diag.bad_col;

    if (table.row_labels() == table.col_labels()) {
      auto const& names = table.row_labels();
      for (std::size_t u = 0; u < nr; ++u) {
        bool unit = true;
        for (std::size_t x = 0; x < nc && unit; ++x) {
          unit = table.cell_name(u, x) == names[x]
                 && table.cell_name(x, u) == names[x];
        }
        if (unit) {
          diag.unit_index = u;
          break;
        }
      }
      diag.is_monoid_window = diag.unit_index.has_value();
    }
    return diag;
  }

  // For a multiplication window two-sided cancellativity is exactly
  // coordinatewise injectivity of the table.
  inline TableDiagnostics cancellative_monoid_check(MapTable const& mult_table) {
    if (mult_table.n_rows() != mult_table.n_cols()) {
      throw InputError("a multiplication table must be square");
    }
    return validate_map(mult_table);
  }

}  // namespace lunar

#endif  // LUNAR_MAP_TABLE_HPP_
