// lunar-lab: sparse 0/1 operators l^2(cols) -> l^2(rows).
#ifndef LUNAR_BOOLEAN_OP_HPP_
#define LUNAR_BOOLEAN_OP_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lunar/errors.hpp"

namespace lunar {

  using Entry = std::pair<std::size_t, std::size_t>;  // (row, col)

  // sigma: I -> J as the sorted list of pairs (i, sigma(i)).
  struct PartialBijection {
    std::vector<Entry> pairs;

    [[nodiscard]] std::vector<std::size_t> domain() const {
      std::vector<std::size_t> d;
      d.reserve(pairs.size());
      for (auto const& p : pairs) {
        d.push_back(p.first);
      }
      return d;
    }
    [[nodiscard]] std::optional<std::size_t> operator()(std::size_t i) const {
      auto it = std::lower_bound(
          pairs.begin(), pairs.end(), Entry{i, 0});
      if (it == pairs.end() || it->first != i) {
        return std::nullopt;
      }
      return it->second;
    }

    friend bool operator==(PartialBijection const&, PartialBijection const&)
        = default;
  };

  // Returns sigma when every row and every column carries at most one
  // support point and the support is non-empty; these are exactly the
  // Boolean matrices of operator norm one.
  inline std::optional<PartialBijection>
  certificate_of(std::size_t n_rows,
                 std::size_t n_cols,
                 std::vector<Entry> const& sorted_support) {
    if (sorted_support.empty()) {
      return std::nullopt;
    }
    std::vector<bool> row_used(n_rows, false), col_used(n_cols, false);
    for (auto [r, c] : sorted_support) {
      if (row_used[r] || col_used[c]) {
        return std::nullopt;
      }
      row_used[r] = col_used[c] = true;
    }
    return PartialBijection{sorted_support};
  }

  class BooleanOp {
   public:
    BooleanOp() = default;

    BooleanOp(std::size_t n_rows, std::size_t n_cols, std::vector<Entry> support)
        : _n_rows(n_rows), _n_cols(n_cols), _support(std::move(support)) {
      std::sort(_support.begin(), _support.end());
      _support.erase(std::unique(_support.begin(), _support.end()),
                     _support.end());
      if (!_support.empty()
          && (_support.back().first >= n_rows
              || std::any_of(_support.begin(), _support.end(), [&](Entry e) {
                   return e.second >= n_cols;
                 }))) {
        throw InputError("Boolean operator support point out of range");
      }
      _certificate = certificate_of(_n_rows, _n_cols, _support);
    }

    static BooleanOp identity(std::size_t n) {
      std::vector<Entry> s;
      s.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        s.emplace_back(i, i);
      }
      return BooleanOp(n, n, std::move(s));
    }

    [[nodiscard]] std::size_t n_rows() const noexcept {
      return _n_rows;
    }
    [[nodiscard]] std::size_t n_cols() const noexcept {
      return _n_cols;
    }
    [[nodiscard]] std::vector<Entry> const& support() const noexcept {
      return _support;
    }
    [[nodiscard]] bool empty() const noexcept {
      return _support.empty();
    }
    [[nodiscard]] std::optional<PartialBijection> const&
    certificate() const noexcept {
      return _certificate;
    }
    [[nodiscard]] bool certified() const noexcept {
      return _certificate.has_value();
    }
    [[nodiscard]] bool contains(std::size_t r, std::size_t c) const {
      return std::binary_search(_support.begin(), _support.end(), Entry{r, c});
    }

    friend bool operator==(BooleanOp const& l, BooleanOp const& r) {
      return l._n_rows == r._n_rows && l._n_cols == r._n_cols
             && l._support == r._support;
    }

   private:
    std::size_t                     _n_rows = 0;
    std::size_t                     _n_cols = 0;
    std::vector<Entry>              _support;
    std::optional<PartialBijection> _certificate;
  };

  inline std::optional<PartialBijection>
  partial_permutation_certificate(BooleanOp const& op) {
    return op.certificate();
  }

  // Boolean product (entries OR-ed), a : k -> rows, b : cols -> k.
  inline BooleanOp compose(BooleanOp const& a, BooleanOp const& b) {
    if (a.n_cols() != b.n_rows()) {
      throw InputError("compose: inner dimensions " + std::to_string(a.n_cols())
                       + " and " + std::to_string(b.n_rows()) + " differ");
    }
    std::vector<std::vector<std::size_t>> b_rows(b.n_rows());
    for (auto [r, c] : b.support()) {
      b_rows[r].push_back(c);
    }
    std::vector<Entry> out;
    for (auto [i, k] : a.support()) {
      for (auto j : b_rows[k]) {
        out.emplace_back(i, j);
      }
    }
    return BooleanOp(a.n_rows(), b.n_cols(), std::move(out));
  }

  inline BooleanOp adjoint(BooleanOp const& a) {
    std::vector<Entry> out;
    out.reserve(a.support().size());
    for (auto [r, c] : a.support()) {
      out.emplace_back(c, r);
    }
    return BooleanOp(a.n_cols(), a.n_rows(), std::move(out));
  }

  // Row-major pairing: (i, j) -> i * dim_b + j on both sides.
  inline BooleanOp kron(BooleanOp const& a, BooleanOp const& b) {
    std::vector<Entry> out;
    out.reserve(a.support().size() * b.support().size());
    for (auto [r1, c1] : a.support()) {
      for (auto [r2, c2] : b.support()) {
        out.emplace_back(r1 * b.n_rows() + r2, c1 * b.n_cols() + c2);
      }
    }
    return BooleanOp(
        a.n_rows() * b.n_rows(), a.n_cols() * b.n_cols(), std::move(out));
  }

  enum class BoolOpKind { compose, adjoint, kron };

  inline BooleanOp
  boolean_algebra(BooleanOp const& a, BooleanOp const& b, BoolOpKind kind) {
    switch (kind) {
      case BoolOpKind::compose:
        return compose(a, b);
      case BoolOpKind::adjoint:
        return adjoint(a);
      case BoolOpKind::kron:
        return kron(a, b);
    }
    throw InvariantViolation("unknown Boolean operation");
  }

  inline std::size_t trace(BooleanOp const& a) {
    return static_cast<std::size_t>(std::count_if(
        a.support().begin(), a.support().end(), [](Entry e) {
          return e.first == e.second;
        }));
  }

  // Coordinate list, one "row,col" line per support point.
  inline void write_coo_csv(std::ostream& os, BooleanOp const& a) {
    for (auto [r, c] : a.support()) {
      os << r << ',' << c << '\n';
    }
  }

}  // namespace lunar

#endif  // LUNAR_BOOLEAN_OP_HPP_
