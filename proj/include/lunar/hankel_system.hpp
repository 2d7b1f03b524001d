// lunar-lab: the Boolean Hankel system {Gamma_l} of a map table.
#ifndef LUNAR_HANKEL_SYSTEM_HPP_
#define LUNAR_HANKEL_SYSTEM_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lunar/boolean_op.hpp"
#include "lunar/corpus.hpp"
#include "lunar/errors.hpp"
#include "lunar/map_table.hpp"

namespace lunar {

  // Gamma_l(a, x) = 1 iff Phi(a, x) = l, one operator per label in the image
  // of Phi.  Labels are kept in increasing id order.
  class HankelSystem {
   public:
    HankelSystem(std::shared_ptr<MapTable const> table,
                 std::vector<LabelId>            labels,
                 std::vector<BooleanOp>          ops)
        : _table(std::move(table)),
          _labels(std::move(labels)),
          _ops(std::move(ops)) {
      if (_labels.size() != _ops.size()) {
        throw InvariantViolation("Hankel system label/operator count mismatch");
      }
    }

    [[nodiscard]] MapTable const& table() const noexcept {
      return *_table;
    }
    [[nodiscard]] std::shared_ptr<MapTable const> const& table_ptr() const noexcept {
      return _table;
    }
    [[nodiscard]] std::vector<LabelId> const& labels() const noexcept {
      return _labels;
    }
    [[nodiscard]] std::vector<BooleanOp> const& ops() const noexcept {
      return _ops;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _ops.size();
    }
    [[nodiscard]] std::size_t n_rows() const noexcept {
      return _table->n_rows();
    }
    [[nodiscard]] std::size_t n_cols() const noexcept {
      return _table->n_cols();
    }

    // Position of a label in labels()/ops(), or size() when absent.
    [[nodiscard]] std::size_t position(LabelId id) const {
      auto it = std::lower_bound(_labels.begin(), _labels.end(), id);
      if (it == _labels.end() || *it != id) {
        return _labels.size();
      }
      return static_cast<std::size_t>(it - _labels.begin());
    }
    [[nodiscard]] bool contains(std::string const& name) const {
      auto id = _table->find_label(name);
      return id && position(*id) != size();
    }
    [[nodiscard]] BooleanOp const& op(std::string const& name) const {
      auto id = _table->find_label(name);
      std::size_t pos = id ? position(*id) : size();
      if (pos == size()) {
        throw InputError("label '" + name + "' is not in the image of the map");
      }
      return _ops[pos];
    }
    [[nodiscard]] std::string const& label_name(std::size_t pos) const {
      return _table->label_name(_labels.at(pos));
    }

    [[nodiscard]] bool all_certified() const {
      return std::all_of(
          _ops.begin(), _ops.end(), [](auto const& o) { return o.certified(); });
    }

    friend bool operator==(HankelSystem const& l, HankelSystem const& r) {
      return *l._table == *r._table && l._labels == r._labels
             && l._ops == r._ops;
    }

   private:
    std::shared_ptr<MapTable const> _table;
    std::vector<LabelId>            _labels;
    std::vector<BooleanOp>          _ops;
  };

  inline HankelSystem build_hankel_system(std::shared_ptr<MapTable const> table) {
    std::size_t const nr = table->n_rows(), nc = table->n_cols();
    std::vector<std::vector<Entry>> supports(table->n_labels());
    for (std::size_t a = 0; a < nr; ++a) {
      for (std::size_t x = 0; x < nc; ++x) {
        supports[table->at(a, x)].emplace_back(a, x);
      }
    }
    std::vector<LabelId>   labels;
    std::vector<BooleanOp> ops;
    for (std::size_t l = 0; l < supports.size(); ++l) {
      if (!supports[l].empty()) {
        labels.push_back(static_cast<LabelId>(l));
        ops.emplace_back(nr, nc, std::move(supports[l]));
      }
    }
    return HankelSystem(std::move(table), std::move(labels), std::move(ops));
  }

  inline HankelSystem build_hankel_system(MapTable table) {
    return build_hankel_system(
        std::make_shared<MapTable const>(std::move(table)));
  }

  // Compression P_{S1} Gamma_l P_{S2}, re-indexed onto S1 x S2.  Operators
  // whose support vanishes are dropped and the surviving labels take the
  // ids of the restricted table, so the result equals the system built from
  // restrict_table(table, S1, S2).
  inline HankelSystem compress_system(HankelSystem const&      system,
                                      std::vector<std::size_t> rows,
                                      std::vector<std::size_t> cols) {
    auto const& parent = system.table();
    rows = detail::normalise_subset(std::move(rows), parent.n_rows(), "row");
    cols = detail::normalise_subset(std::move(cols), parent.n_cols(), "column");
    auto restricted
        = std::make_shared<MapTable const>(restrict_table(parent, rows, cols));

    std::size_t const        none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> row_pos(parent.n_rows(), none);
    std::vector<std::size_t> col_pos(parent.n_cols(), none);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      row_pos[rows[i]] = i;
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      col_pos[cols[j]] = j;
    }

    std::vector<std::pair<LabelId, BooleanOp>> kept;
    for (std::size_t k = 0; k < system.size(); ++k) {
      std::vector<Entry> s;
      for (auto [r, c] : system.ops()[k].support()) {
        if (row_pos[r] != none && col_pos[c] != none) {
          s.emplace_back(row_pos[r], col_pos[c]);
        }
      }
      if (s.empty()) {
        continue;
      }
      auto id = restricted->find_label(system.label_name(k));
      if (!id) {
        throw InvariantViolation("compressed label missing from restriction");
      }
      kept.emplace_back(*id, BooleanOp(rows.size(), cols.size(), std::move(s)));
    }
    std::sort(kept.begin(), kept.end(), [](auto const& l, auto const& r) {
      return l.first < r.first;
    });
    std::vector<LabelId>   labels;
    std::vector<BooleanOp> ops;
    for (auto& [id, op] : kept) {
      labels.push_back(id);
      ops.push_back(std::move(op));
    }
    return HankelSystem(std::move(restricted), std::move(labels), std::move(ops));
  }

}  // namespace lunar

#endif  // LUNAR_HANKEL_SYSTEM_HPP_
