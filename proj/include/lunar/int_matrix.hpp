// lunar-lab: exact sparse integer matrices for the diagram identities.
#ifndef LUNAR_INT_MATRIX_HPP_
#define LUNAR_INT_MATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lunar/boolean_op.hpp"
#include "lunar/errors.hpp"

namespace lunar {

  struct IntEntry {
    std::size_t  row;
    std::size_t  col;
    std::int64_t value;

    friend bool operator==(IntEntry const&, IntEntry const&) = default;
  };

  // Coordinate storage sorted by (row, col), duplicates summed and zeros
  // removed, so equality of matrices is equality of entry lists.
  class IntMatrix {
   public:
    IntMatrix() = default;

    IntMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<IntEntry> e)
        : _n_rows(n_rows), _n_cols(n_cols), _entries(std::move(e)) {
      normalise();
    }

    static IntMatrix from_boolean(BooleanOp const& op) {
      std::vector<IntEntry> e;
      e.reserve(op.support().size());
      for (auto [r, c] : op.support()) {
        e.push_back({r, c, 1});
      }
      return IntMatrix(op.n_rows(), op.n_cols(), std::move(e));
    }

    // Column j is the basis vector e_{index[j]}: an isometric embedding of a
    // coordinate subspace into a space of dimension n.
    static IntMatrix embedding(std::size_t n, std::vector<std::size_t> const& index) {
      std::vector<IntEntry> e;
      e.reserve(index.size());
      for (std::size_t j = 0; j < index.size(); ++j) {
        e.push_back({index[j], j, 1});
      }
      return IntMatrix(n, index.size(), std::move(e));
    }

    [[nodiscard]] std::size_t n_rows() const noexcept {
      return _n_rows;
    }
    [[nodiscard]] std::size_t n_cols() const noexcept {
      return _n_cols;
    }
    [[nodiscard]] std::vector<IntEntry> const& entries() const noexcept {
      return _entries;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _entries.empty();
    }

    friend bool operator==(IntMatrix const& l, IntMatrix const& r) {
      return l._n_rows == r._n_rows && l._n_cols == r._n_cols
             && l._entries == r._entries;
    }

   private:
    void normalise() {
      for (auto const& e : _entries) {
        if (e.row >= _n_rows || e.col >= _n_cols) {
          throw InputError("integer matrix entry out of range");
        }
      }
      std::sort(_entries.begin(), _entries.end(), [](auto const& l, auto const& r) {
        return l.row != r.row ? l.row < r.row : l.col < r.col;
      });
      std::vector<IntEntry> merged;
      merged.reserve(_entries.size());
      for (auto const& e : _entries) {
        if (!merged.empty() && merged.back().row == e.row
            && merged.back().col == e.col) {
          merged.back().value += e.value;
        } else {
          merged.push_back(e);
        }
      }
      merged.erase(std::remove_if(merged.begin(),
                                  merged.end(),
                                  [](auto const& e) { return e.value == 0; }),
                   merged.end());
      _entries = std::move(merged);
    }

    std::size_t           _n_rows = 0;
    std::size_t           _n_cols = 0;
    std::vector<IntEntry> _entries;
  };

  inline IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.n_cols() != b.n_rows()) {
      throw InputError("integer product: inner dimensions "
                       + std::to_string(a.n_cols()) + " and "
                       + std::to_string(b.n_rows()) + " differ");
    }
    auto const&           be = b.entries();
    std::vector<IntEntry> out;
    for (auto const& x : a.entries()) {
      auto lo = std::lower_bound(be.begin(), be.end(), x.col, [](auto const& e, std::size_t r) {
        return e.row < r;
      });
      for (; lo != be.end() && lo->row == x.col; ++lo) {
        out.push_back({x.row, lo->col, x.value * lo->value});
      }
    }
    return IntMatrix(a.n_rows(), b.n_cols(), std::move(out));
  }

  inline IntMatrix transpose(IntMatrix const& a) {
    std::vector<IntEntry> out;
    out.reserve(a.entries().size());
    for (auto const& e : a.entries()) {
      out.push_back({e.col, e.row, e.value});
    }
    return IntMatrix(a.n_cols(), a.n_rows(), std::move(out));
  }

  inline IntMatrix kron(IntMatrix const& a, IntMatrix const& b) {
    std::vector<IntEntry> out;
    out.reserve(a.entries().size() * b.entries().size());
    for (auto const& x : a.entries()) {
      for (auto const& y : b.entries()) {
        out.push_back({x.row * b.n_rows() + y.row,
                       x.col * b.n_cols() + y.col,
                       x.value * y.value});
      }
    }
    return IntMatrix(a.n_rows() * b.n_rows(), a.n_cols() * b.n_cols(), std::move(out));
  }

  // Block-diagonal sum diag(blocks[0], blocks[1], ...).
  inline IntMatrix direct_sum(std::vector<IntMatrix> const& blocks) {
    std::size_t           r0 = 0, c0 = 0;
    std::vector<IntEntry> out;
    for (auto const& b : blocks) {
      for (auto const& e : b.entries()) {
        out.push_back({r0 + e.row, c0 + e.col, e.value});
      }
      r0 += b.n_rows();
      c0 += b.n_cols();
    }
    return IntMatrix(r0, c0, std::move(out));
  }

}  // namespace lunar

#endif  // LUNAR_INT_MATRIX_HPP_
