// lunar-lab: the example corpus of maps and monoid windows, plus the
// restriction / tensor / refinement / transposition combinators.
#ifndef LUNAR_CORPUS_HPP_
#define LUNAR_CORPUS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lunar/errors.hpp"
#include "lunar/map_table.hpp"

namespace lunar {

  struct CorpusSpec;
  using CorpusPtr = std::shared_ptr<CorpusSpec const>;

  namespace corpus {
    // Phi(x, y) = x + y on {0, ..., n-1}^2.
    struct NatWindow {
      std::size_t n;
    };
    // Componentwise addition on {0, ..., n-1}^d.
    struct NatPowerWindow {
      std::size_t d;
      std::size_t n;
    };
    // Concatenation on the words of length <= max_len over an alphabet.
    struct FreeMonoidWindow {
      std::size_t alphabet_size;
      std::size_t max_len;
    };
    // Matrix product on SL_2(N) matrices with entries <= entry_bound.
    struct SL2Window {
      std::int64_t entry_bound;
    };
    // Phi(x, y) = a x^m + b y^n on {1..x_max} x {1..y_max}, exact rationals.
    struct Polynomial {
      std::int64_t a, b, m, n;
      std::size_t  x_max, y_max;
    };
    // Phi(x, y) = a x^2 + b y^2 + c xy on {1..x_max} x {1..y_max}.
    struct Quadratic {
      std::int64_t a, b, c;
      std::size_t  x_max, y_max;
    };
    // The 3 x 3 five-colour board.
    struct Checkerboard3 {};
    // Phi(a, x) = a x^{-1} from a Cayley table; `order` > 0 with no table
    // means the cyclic group Z/order.
    struct GroupDivision {
      std::shared_ptr<MapTable const> cayley;
      std::size_t                     order = 0;
    };
    struct Restrict {
      CorpusPtr                inner;
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
    };
    struct Tensor {
      CorpusPtr left;
      CorpusPtr right;
    };
    struct Refine {
      CorpusPtr left;
      CorpusPtr right;
    };
    struct Transpose {
      CorpusPtr inner;
    };
  }  // namespace corpus

  struct CorpusSpec {
    std::variant<corpus::NatWindow,
                 corpus::NatPowerWindow,
                 corpus::FreeMonoidWindow,
                 corpus::SL2Window,
                 corpus::Polynomial,
                 corpus::Quadratic,
                 corpus::Checkerboard3,
                 corpus::GroupDivision,
                 corpus::Restrict,
                 corpus::Tensor,
                 corpus::Refine,
                 corpus::Transpose>
        value;
  };

  template <typename T>
  CorpusPtr make_spec(T v) {
    return std::make_shared<CorpusSpec const>(CorpusSpec{std::move(v)});
  }

  ////////////////////////////////////////////////////////////////////////
  // Table-level combinators
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::vector<std::size_t> normalise_subset(std::vector<std::size_t> s,
                                                     std::size_t bound,
                                                     char const* what) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (s.empty()) {
        throw InputError(std::string("empty ") + what + " subset");
      }
      if (s.back() >= bound) {
        throw InputError(std::string(what) + " subset index "
                         + std::to_string(s.back()) + " out of range");
      }
      return s;
    }

    inline std::string pair_name(std::string const& l, std::string const& r) {
      return "(" + l + "," + r + ")";
    }
  }  // namespace detail

  // Phi restricted to rows x cols (indices, sorted and deduplicated).
  inline MapTable restrict_table(MapTable const&          t,
                                 std::vector<std::size_t> rows,
                                 std::vector<std::size_t> cols) {
    rows = detail::normalise_subset(std::move(rows), t.n_rows(), "row");
    cols = detail::normalise_subset(std::move(cols), t.n_cols(), "column");
    std::vector<std::string> rn, cn;
    for (auto r : rows) {
      rn.push_back(t.row_labels()[r]);
    }
    for (auto c : cols) {
      cn.push_back(t.col_labels()[c]);
    }
    return MapTable::from_function(
        std::move(rn),
        std::move(cn),
        [&](std::size_t a, std::size_t x) {
          return t.cell_name(rows[a], cols[x]);
        },
        "restrict(" + t.origin() + ")");
  }

  // (Phi1 (x) Phi2)((a1, a2), (x1, x2)) = (Phi1(a1, x1), Phi2(a2, x2)), with
  // row-major pairing of the index pairs.
  inline MapTable tensor_tables(MapTable const& l, MapTable const& r) {
    std::vector<std::string> rn, cn;
    for (auto const& a1 : l.row_labels()) {
      for (auto const& a2 : r.row_labels()) {
        rn.push_back(detail::pair_name(a1, a2));
      }
    }
    for (auto const& x1 : l.col_labels()) {
      for (auto const& x2 : r.col_labels()) {
        cn.push_back(detail::pair_name(x1, x2));
      }
    }
    std::size_t const ra = r.n_rows(), rx = r.n_cols();
    return MapTable::from_function(
        std::move(rn),
        std::move(cn),
        [&](std::size_t a, std::size_t x) {
          return detail::pair_name(l.cell_name(a / ra, x / rx),
                                   r.cell_name(a % ra, x % rx));
        },
        "tensor(" + l.origin() + "," + r.origin() + ")");
  }

  // Phi(a, x) = (Phi1(a, x), Phi2(a, x)) on a common grid.
  inline MapTable refine_tables(MapTable const& l, MapTable const& r) {
    if (l.n_rows() != r.n_rows() || l.n_cols() != r.n_cols()) {
      throw InputError("refinement needs two maps on the same grid");
    }
    return MapTable::from_function(
        l.row_labels(),
        l.col_labels(),
        [&](std::size_t a, std::size_t x) {
          return detail::pair_name(l.cell_name(a, x), r.cell_name(a, x));
        },
        "refine(" + l.origin() + "," + r.origin() + ")");
  }

  inline MapTable transpose_table(MapTable const& t) {
    return MapTable::from_function(
        t.col_labels(),
        t.row_labels(),
        [&](std::size_t x, std::size_t a) { return t.cell_name(a, x); },
        "transpose(" + t.origin() + ")");
  }

  ////////////////////////////////////////////////////////////////////////
  // Base tables
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::vector<std::string> range_names(std::size_t lo, std::size_t n) {
      std::vector<std::string> v;
      v.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        v.push_back(std::to_string(lo + i));
      }
      return v;
    }

    inline std::string tuple_name(std::vector<std::size_t> const& t) {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + std::to_string(t[i]);
      }
      return s + ")";
    }

    // Exact value of a x^m with m != 0, as a reduced fraction p/q, q > 0.
    struct Fraction {
      __int128 num;
      __int128 den;
    };

    inline __int128 gcd128(__int128 a, __int128 b) {
      if (a < 0) {
        a = -a;
      }
      while (b != 0) {
        __int128 t = a % b;
        a          = b;
        b          = t < 0 ? -t : t;
      }
      return a;
    }

    inline Fraction normalise(Fraction f) {
      if (f.den < 0) {
        f.num = -f.num;
        f.den = -f.den;
      }
      __int128 g = gcd128(f.num, f.den);
      if (g > 1) {
        f.num /= g;
        f.den /= g;
      }
      return f;
    }

    inline Fraction monomial(std::int64_t coeff, std::size_t base, std::int64_t exp) {
      __int128     p = 1;
      std::int64_t e = exp < 0 ? -exp : exp;
      for (std::int64_t i = 0; i < e; ++i) {
        p *= static_cast<__int128>(base);
        if (p > (static_cast<__int128>(1) << 100)) {
          throw InputError("polynomial value overflows exact arithmetic");
        }
      }
      return exp > 0 ? Fraction{coeff * p, 1} : normalise(Fraction{coeff, p});
    }

    inline Fraction add(Fraction l, Fraction r) {
      return normalise(Fraction{l.num * r.den + r.num * l.den, l.den * r.den});
    }

    inline std::string to_string128(__int128 v) {
      if (v == 0) {
        return "0";
      }
      bool        neg = v < 0;
      std::string s;
      while (v != 0) {
        int digit = static_cast<int>(v % 10);
        s.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        v /= 10;
      }
      if (neg) {
        s.push_back('-');
      }
      return {s.rbegin(), s.rend()};
    }

    inline std::string fraction_name(Fraction f) {
      return f.den == 1 ? to_string128(f.num)
                        : to_string128(f.num) + "/" + to_string128(f.den);
    }

    using Mat2 = std::array<std::int64_t, 4>;

    inline std::string mat_name(Mat2 const& m) {
      return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],["
             + std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
    }
  }  // namespace detail

  inline MapTable nat_window(std::size_t n) {
    if (n < 1) {
      throw InputError("NatWindow needs n >= 1");
    }
    auto names = detail::range_names(0, n);
    return MapTable::from_function(
        names,
        names,
        [](std::size_t a, std::size_t x) { return std::to_string(a + x); },
        "NatWindow{" + std::to_string(n) + "}");
  }

  inline MapTable nat_power_window(std::size_t d, std::size_t n) {
    if (d < 1 || n < 1) {
      throw InputError("NatPowerWindow needs d >= 1 and n >= 1");
    }
    std::vector<std::vector<std::size_t>> pts;
    std::vector<std::size_t>              cur(d, 0);
    while (true) {
      pts.push_back(cur);
      std::size_t k = d;
      while (k > 0 && ++cur[k - 1] == n) {
        cur[--k] = 0;
      }
      if (k == 0) {
        break;
      }
    }
    std::vector<std::string> names;
    for (auto const& p : pts) {
      names.push_back(detail::tuple_name(p));
    }
    return MapTable::from_function(
        names,
        names,
        [&](std::size_t a, std::size_t x) {
          std::vector<std::size_t> s(d);
          for (std::size_t i = 0; i < d; ++i) {
            s[i] = pts[a][i] + pts[x][i];
          }
          return detail::tuple_name(s);
        },
        "NatPowerWindow{" + std::to_string(d) + "," + std::to_string(n) + "}");
  }

  inline MapTable free_monoid_window(std::size_t alphabet_size,
                                     std::size_t max_len) {
    if (alphabet_size < 1 || alphabet_size > 26) {
      throw InputError("FreeMonoidWindow alphabet size must be in 1..26");
    }
    // Shortlex order: by length, then lexicographic.
    std::vector<std::string> words{""};
    std::size_t              begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t end = words.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t c = 0; c < alphabet_size; ++c) {
          words.push_back(words[i] + static_cast<char>('a' + c));
        }
      }
      begin = end;
    }
    auto name = [](std::string const& w) { return w.empty() ? "ε" : w; };
    std::vector<std::string> names;
    for (auto const& w : words) {
      names.push_back(name(w));
    }
    return MapTable::from_function(
        names,
        names,
        [&](std::size_t a, std::size_t x) { return name(words[a] + words[x]); },
        "FreeMonoidWindow{" + std::to_string(alphabet_size) + ","
            + std::to_string(max_len) + "}");
  }

  inline MapTable sl2_window(std::int64_t entry_bound) {
    if (entry_bound < 1) {
      throw InputError("SL2Window needs entry_bound >= 1");
    }
    std::vector<detail::Mat2> mats;
    for (std::int64_t p = 0; p <= entry_bound; ++p) {
      for (std::int64_t q = 0; q <= entry_bound; ++q) {
        for (std::int64_t r = 0; r <= entry_bound; ++r) {
          for (std::int64_t s = 0; s <= entry_bound; ++s) {
            if (p * s - q * r == 1) {
              mats.push_back({p, q, r, s});
            }
          }
        }
      }
    }
    std::vector<std::string> names;
    for (auto const& m : mats) {
      names.push_back(detail::mat_name(m));
    }
    return MapTable::from_function(
        names,
        names,
        [&](std::size_t i, std::size_t j) {
          auto const& l = mats[i];
          auto const& r = mats[j];
          return detail::mat_name({l[0] * r[0] + l[1] * r[2],
                                   l[0] * r[1] + l[1] * r[3],
                                   l[2] * r[0] + l[3] * r[2],
                                   l[2] * r[1] + l[3] * r[3]});
        },
        "SL2Window{" + std::to_string(entry_bound) + "}");
  }

  inline MapTable polynomial_map(corpus::Polynomial const& p) {
    if (p.a == 0 || p.b == 0 || p.m == 0 || p.n == 0) {
      throw InputError("Polynomial coefficients and exponents must be non-zero");
    }
    if (p.x_max < 1 || p.y_max < 1) {
      throw InputError("Polynomial window must be non-empty");
    }
    return MapTable::from_function(
        detail::range_names(1, p.x_max),
        detail::range_names(1, p.y_max),
        [&](std::size_t i, std::size_t j) {
          return detail::fraction_name(
              detail::add(detail::monomial(p.a, i + 1, p.m),
                          detail::monomial(p.b, j + 1, p.n)));
        },
        "Polynomial{" + std::to_string(p.a) + "," + std::to_string(p.b) + ","
            + std::to_string(p.m) + "," + std::to_string(p.n) + ","
            + std::to_string(p.x_max) + "," + std::to_string(p.y_max) + "}");
  }

  inline MapTable quadratic_map(corpus::Quadratic const& q) {
    if (q.x_max < 1 || q.y_max < 1) {
      throw InputError("Quadratic window must be non-empty");
    }
    return MapTable::from_function(
        detail::range_names(1, q.x_max),
        detail::range_names(1, q.y_max),
        [&](std::size_t i, std::size_t j) {
          auto x = static_cast<std::int64_t>(i + 1);
          auto y = static_cast<std::int64_t>(j + 1);
          return std::to_string(q.a * x * x + q.b * y * y + q.c * x * y);
        },
        "Quadratic{" + std::to_string(q.a) + "," + std::to_string(q.b) + ","
            + std::to_string(q.c) + "," + std::to_string(q.x_max) + ","
            + std::to_string(q.y_max) + "}");
  }

  // Rows/columns are 1-based to match the usual matrix-unit naming.  Only the
  // red/orange/blue cells are pinned by the board's matrix; purple sits at
  // (3,1) and grey at (3,2).
  inline MapTable checkerboard3() {
    return MapTable::from_strings({"1", "2", "3"},
                                  {"1", "2", "3"},
                                  {{"red", "orange", "blue"},
                                   {"blue", "red", "orange"},
                                   {"purple", "grey", "red"}},
                                  "Checkerboard3");
  }

  inline MapTable cyclic_group_table(std::size_t n) {
    if (n < 1) {
      throw InputError("cyclic group order must be >= 1");
    }
    auto names = detail::range_names(0, n);
    return MapTable::from_function(
        names,
        names,
        [n](std::size_t a, std::size_t x) { return std::to_string((a + x) % n); },
        "Z/" + std::to_string(n));
  }

  // Phi(a, x) = a x^{-1}.  The Cayley table must be a group table over its
  // own row names.
  inline MapTable group_division(MapTable const& cayley) {
    std::size_t const n = cayley.n_rows();
    if (cayley.n_cols() != n || cayley.row_labels() != cayley.col_labels()) {
      throw InputError("Cayley table must be square over one element set");
    }
    auto const&        names = cayley.row_labels();
    std::vector<std::size_t> mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < n; ++x) {
        auto it = std::find(names.begin(), names.end(), cayley.cell_name(a, x));
        if (it == names.end()) {
          throw InputError("Cayley table is not closed: product '"
                           + cayley.cell_name(a, x) + "' is not an element");
        }
        mul[a * n + x] = static_cast<std::size_t>(it - names.begin());
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]) {
            throw InputError("Cayley table is not associative");
          }
        }
      }
    }
    std::optional<std::size_t> unit;
    for (std::size_t e = 0; e < n && !unit; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        ok = mul[e * n + a] == a && mul[a * n + e] == a;
      }
      if (ok) {
        unit = e;
      }
    }
    if (!unit) {
      throw InputError("Cayley table has no identity element");
    }
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul[a * n + b] == *unit && mul[b * n + a] == *unit) {
          inv[a] = b;
        }
      }
      if (inv[a] == n) {
        throw InputError("element '" + names[a] + "' has no inverse");
      }
    }
    return MapTable::from_function(
        names,
        names,
        [&](std::size_t a, std::size_t x) { return names[mul[a * n + inv[x]]]; },
        "GroupDivision(" + cayley.origin() + ")");
  }

  ////////////////////////////////////////////////////////////////////////
  // Dispatch
  ////////////////////////////////////////////////////////////////////////

  inline MapTable make_corpus(CorpusSpec const& spec);

  namespace detail {
    inline CorpusSpec const& deref(CorpusPtr const& p, char const* what) {
      if (!p) {
        throw InputError(std::string("missing inner spec for ") + what);
      }
      return *p;
    }

    template <class... Ts>
    struct Overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    Overloaded(Ts...) -> Overloaded<Ts...>;
  }  // namespace detail

  inline MapTable make_corpus(CorpusSpec const& spec) {
    using namespace corpus;
    return std::visit(
        detail::Overloaded{
            [](NatWindow const& v) { return nat_window(v.n); },
            [](NatPowerWindow const& v) { return nat_power_window(v.d, v.n); },
            [](FreeMonoidWindow const& v) {
              return free_monoid_window(v.alphabet_size, v.max_len);
            },
            [](SL2Window const& v) { return sl2_window(v.entry_bound); },
            [](Polynomial const& v) { return polynomial_map(v); },
            [](Quadratic const& v) { return quadratic_map(v); },
            [](Checkerboard3 const&) { return checkerboard3(); },
            [](GroupDivision const& v) {
              if (v.cayley) {
                return group_division(*v.cayley);
              }
              if (v.order == 0) {
                throw InputError("GroupDivision needs a Cayley table or order");
              }
              return group_division(cyclic_group_table(v.order));
            },
            [](Restrict const& v) {
              return restrict_table(
                  make_corpus(detail::deref(v.inner, "Restrict")), v.rows, v.cols);
            },
            [](Tensor const& v) {
              return tensor_tables(make_corpus(detail::deref(v.left, "Tensor")),
                                   make_corpus(detail::deref(v.right, "Tensor")));
            },
            [](Refine const& v) {
              return refine_tables(make_corpus(detail::deref(v.left, "Refine")),
                                   make_corpus(detail::deref(v.right, "Refine")));
            },
            [](Transpose const& v) {
              return transpose_table(
                  make_corpus(detail::deref(v.inner, "Transpose")));
            }},
        spec.value);
  }

}  // namespace lunar

#endif  // LUNAR_CORPUS_HPP_
