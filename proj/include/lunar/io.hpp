// lunar-lab: JSON and CSV serialization of tables, corpus specs and reports.
#ifndef LUNAR_IO_HPP_
#define LUNAR_IO_HPP_

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lunar/corpus.hpp"
#include "lunar/foliation.hpp"
#include "lunar/hankel_system.hpp"
#include "lunar/hardy.hpp"
#include "lunar/lunar_check.hpp"
#include "lunar/map_table.hpp"
#include "lunar/reproduce.hpp"
#include "lunar/sap.hpp"
#include "lunar/search.hpp"
#include "lunar/tensor_norm.hpp"

namespace lunar {

  using json = nlohmann::json;

  inline constexpr char const* kSchema = "lunar-lab/1";

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  inline json table_to_json(MapTable const& t) {
    json cells = json::array();
    for (std::size_t a = 0; a < t.n_rows(); ++a) {
      json line = json::array();
      for (std::size_t x = 0; x < t.n_cols(); ++x) {
        line.push_back(t.cell_name(a, x));
      }
      cells.push_back(std::move(line));
    }
    return {{"rows", t.row_labels()}, {"cols", t.col_labels()}, {"cells", cells}};
  }

  namespace detail {
    inline std::vector<std::string> string_list(json const& j, char const* key) {
      if (!j.contains(key) || !j[key].is_array()) {
        throw InputError(std::string("table JSON needs an array '") + key + "'");
      }
      std::vector<std::string> out;
      for (auto const& e : j[key]) {
        if (!e.is_string()) {
          throw InputError(std::string("'") + key + "' entries must be strings");
        }
        out.push_back(e.get<std::string>());
      }
      return out;
    }
  }  // namespace detail

  inline MapTable table_from_json(json const& j, std::string origin = {}) {
    if (!j.is_object()) {
      throw InputError("table JSON must be an object");
    }
    auto rows = detail::string_list(j, "rows");
    auto cols = detail::string_list(j, "cols");
    if (!j.contains("cells") || !j["cells"].is_array()) {
      throw InputError("table JSON needs an array 'cells'");
    }
    std::vector<std::vector<std::string>> grid;
    for (auto const& line : j["cells"]) {
      if (!line.is_array()) {
        throw InputError("'cells' must be an array of arrays");
      }
      std::vector<std::string> g;
      for (auto const& c : line) {
        if (!c.is_string()) {
          throw InputError("cell labels must be strings");
        }
        g.push_back(c.get<std::string>());
      }
      grid.push_back(std::move(g));
    }
    return MapTable::from_strings(std::move(rows), std::move(cols), grid, std::move(origin));
  }

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Corpus specs
  ////////////////////////////////////////////////////////////////////////

  inline json corpus_to_json(CorpusSpec const& spec);

  namespace detail {
    inline json ptr_to_json(CorpusPtr const& p) {
      if (!p) {
        throw InputError("corpus spec has a missing operand");
      }
      return corpus_to_json(*p);
    }
  }  // namespace detail

  inline json corpus_to_json(CorpusSpec const& spec) {
    using namespace corpus;
    return std::visit(
        detail::Overloaded{
            [](NatWindow const& v) -> json { return {{"variant", "NatWindow"}, {"n", v.n}}; },
            [](NatPowerWindow const& v) -> json {
              return {{"variant", "NatPowerWindow"}, {"d", v.d}, {"n", v.n}};
            },
            [](FreeMonoidWindow const& v) -> json {
              return {{"variant", "FreeMonoidWindow"},
                      {"alphabet_size", v.alphabet_size},
                      {"max_len", v.max_len}};
            },
            [](SL2Window const& v) -> json {
              return {{"variant", "SL2Window"}, {"entry_bound", v.entry_bound}};
            },
            [](Polynomial const& v) -> json {
              return {{"variant", "Polynomial"}, {"a", v.a}, {"b", v.b}, {"m", v.m},
                      {"n", v.n}, {"x_max", v.x_max}, {"y_max", v.y_max}};
            },
            [](Quadratic const& v) -> json {
              return {{"variant", "Quadratic"}, {"a", v.a}, {"b", v.b}, {"c", v.c},
                      {"x_max", v.x_max}, {"y_max", v.y_max}};
            },
            [](Checkerboard3 const&) -> json { return {{"variant", "Checkerboard3"}}; },
            [](GroupDivision const& v) -> json {
              json j{{"variant", "GroupDivision"}};
              if (v.cayley) {
                j["cayley"] = table_to_json(*v.cayley);
              } else {
                j["order"] = v.order;
              }
              return j;
            },
            [](Restrict const& v) -> json {
              return {{"variant", "Restrict"},
                      {"inner", detail::ptr_to_json(v.inner)},
                      {"rows", v.rows},
                      {"cols", v.cols}};
            },
            [](Tensor const& v) -> json {
              return {{"variant", "Tensor"},
                      {"left", detail::ptr_to_json(v.left)},
                      {"right", detail::ptr_to_json(v.right)}};
            },
            [](Refine const& v) -> json {
              return {{"variant", "Refine"},
                      {"left", detail::ptr_to_json(v.left)},
                      {"right", detail::ptr_to_json(v.right)}};
            },
            [](Transpose const& v) -> json {
              return {{"variant", "Transpose"}, {"inner", detail::ptr_to_json(v.inner)}};
            }},
        spec.value);
  }

  inline CorpusSpec corpus_from_json(json const& j) {
    using namespace corpus;
    if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string()) {
      throw InputError("corpus spec needs a string 'variant'");
    }
    auto const v   = j["variant"].get<std::string>();
    auto       num = [&](char const* key) -> json const& {
      if (!j.contains(key) || !j[key].is_number_integer()) {
        throw InputError("corpus spec " + v + " needs integer '" + key + "'");
      }
      return j[key];
    };
    auto size = [&](char const* key) {
      auto const& x = num(key);
      if (x.get<long long>() < 0) {
        throw InputError("corpus spec " + v + ": '" + key + "' must be >= 0");
      }
      return x.get<std::size_t>();
    };
    auto sub = [&](char const* key) {
      if (!j.contains(key)) {
        throw InputError("corpus spec " + v + " needs '" + key + "'");
      }
      return std::make_shared<CorpusSpec const>(corpus_from_json(j[key]));
    };
    auto index_list = [&](char const* key) {
      if (!j.contains(key) || !j[key].is_array()) {
        throw InputError("corpus spec " + v + " needs an index array '" + key + "'");
      }
      return j[key].get<std::vector<std::size_t>>();
    };
    if (v == "NatWindow") return {NatWindow{size("n")}};
    if (v == "NatPowerWindow") return {NatPowerWindow{size("d"), size("n")}};
    if (v == "FreeMonoidWindow") return {FreeMonoidWindow{size("alphabet_size"), size("max_len")}};
    if (v == "SL2Window") return {SL2Window{num("entry_bound").get<std::int64_t>()}};
    if (v == "Polynomial") {
      return {Polynomial{num("a").get<std::int64_t>(), num("b").get<std::int64_t>(),
                         num("m").get<std::int64_t>(), num("n").get<std::int64_t>(),
                         size("x_max"), size("y_max")}};
    }
    if (v == "Quadratic") {
      return {Quadratic{num("a").get<std::int64_t>(), num("b").get<std::int64_t>(),
                        num("c").get<std::int64_t>(), size("x_max"), size("y_max")}};
    }
    if (v == "Checkerboard3") return {Checkerboard3{}};
    if (v == "GroupDivision") {
      if (j.contains("cayley")) {
        return {GroupDivision{std::make_shared<MapTable const>(table_from_json(j["cayley"], "cayley")), 0}};
      }
      return {GroupDivision{nullptr, size("order")}};
    }
    if (v == "Restrict") return {Restrict{sub("inner"), index_list("rows"), index_list("cols")}};
    if (v == "Tensor") return {Tensor{sub("left"), sub("right")}};
    if (v == "Refine") return {Refine{sub("left"), sub("right")}};
    if (v == "Transpose") return {Transpose{sub("inner")}};
    throw InputError("unknown corpus variant '" + v + "'");
  }

  // A table file holds either an explicit grid or a corpus spec.
  inline MapTable load_table(std::string const& path) {
    auto j = read_json_file(path);
    if (j.is_object() && j.contains("variant")) {
      return make_corpus(corpus_from_json(j));
    }
    return table_from_json(j, path);
  }

  ////////////////////////////////////////////////////////////////////////
  // Numbers
  ////////////////////////////////////////////////////////////////////////

  inline json real_to_json(double x) {
    if (std::isinf(x)) {
      return x > 0 ? "inf" : "-inf";
    }
    if (std::isnan(x)) {
      return "nan";
    }
    return x;
  }

  inline json matrix_to_json(DenseMatrix const& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json r = json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) {
        r.push_back({m(i, k).real(), m(i, k).imag()});
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }

  inline DenseMatrix matrix_from_json(json const& j) {
    if (!j.is_array() || j.empty()) {
      throw InputError("matrix JSON must be a non-empty array of rows");
    }
    auto const  nr = static_cast<Eigen::Index>(j.size());
    auto const  nc = static_cast<Eigen::Index>(j[0].size());
    DenseMatrix m(nr, nc);
    for (Eigen::Index i = 0; i < nr; ++i) {
      if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != nc) {
        throw InputError("matrix JSON rows must have equal length");
      }
      for (Eigen::Index k = 0; k < nc; ++k) {
        auto const& e = j[i][k];
        if (e.is_number()) {
          m(i, k) = e.get<double>();
        } else if (e.is_array() && e.size() == 2) {
          m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
          throw InputError("matrix entries are numbers or [re, im] pairs");
        }
      }
    }
    return m;
  }

  inline json coeffs_to_json(CoeffFamily const& f) {
    json c = json::object();
    for (auto const& [k, m] : f.coeffs) {
      c[k] = matrix_to_json(m);
    }
    json j{{"dim", f.dim}, {"coeffs", c}};
    if (f.identity_coeff) {
      j["identity"] = matrix_to_json(*f.identity_coeff);
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  inline json pair_json(IndexPair p) {
    return json::array({p.first, p.second});
  }

  inline json pairs_json(std::vector<IndexPair> const& v) {
    json a = json::array();
    for (auto p : v) {
      a.push_back(pair_json(p));
    }
    return a;
  }

  inline json to_json(TableDiagnostics const& d) {
    auto w = [](std::optional<RepeatWitness> const& r) -> json {
      if (!r) {
        return nullptr;
      }
      return {{"index", r->index}, {"first", r->first}, {"second", r->second}};
    };
    json j{{"coordinatewise_injective", d.coordinatewise_injective},
           {"bad_row", w(d.bad_row)},
           {"bad_col", w(d.bad_col)},
           {"is_monoid_window", d.is_monoid_window}};
    j["unit_index"] = d.unit_index ? json(*d.unit_index) : json(nullptr);
    return j;
  }

  inline json to_json(LunarReport const& r) {
    json j{{"is_lunar", r.is_lunar},
           {"method", std::string(to_string(r.method))},
           {"window_local", r.window_local}};
    if (r.witness) {
      auto const& w = *r.witness;
      j["witness"]  = {{"a", w.a}, {"b", w.b}, {"c", w.c}, {"d", w.d},
                       {"x", w.x}, {"y", w.y}, {"z", w.z}, {"w", w.w}};
    } else {
      j["witness"] = nullptr;
    }
    if (r.overlap_witness) {
      auto const& w        = *r.overlap_witness;
      j["overlap_witness"] = {{"first_rep", pair_json(w.first_rep)},
                              {"second_rep", pair_json(w.second_rep)},
                              {"point", pair_json(w.point)}};
    } else {
      j["overlap_witness"] = nullptr;
    }
    j["injectivity"] = r.injectivity ? to_json(*r.injectivity) : json(nullptr);
    return j;
  }

  inline json to_json(HankelSystem const& s) {
    json j = json::object();
    for (std::size_t k = 0; k < s.size(); ++k) {
      json pts = json::array();
      for (auto [r, c] : s.ops()[k].support()) {
        pts.push_back({r, c});
      }
      j[s.label_name(k)] = std::move(pts);
    }
    return j;
  }

  inline json to_json(Foliation const& f) {
    json classes = json::array();
    for (auto const& c : f.classes) {
      classes.push_back(
          {{"rep", pair_json(c.rep)}, {"club", pairs_json(c.club)}, {"spade", pairs_json(c.spade)}});
    }
    return {{"classes", classes},
            {"star", pairs_json(f.star)},
            {"h_perp", pairs_json(f.h_perp)},
            {"diagonal_class", f.diagonal_class ? json(*f.diagonal_class) : json(nullptr)}};
  }

  inline json to_json(DiagramReport const& r) {
    json checks = json::array();
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (auto const& c : r.checks) {
      checks.push_back({{"kind", c.kind}, {"label", c.label}, {"block", c.block}, {"pass", c.pass}});
      auto& k = counts[c.kind];
      ++k.first;
      k.second += c.pass ? 0 : 1;
    }
    json summary = json::object();
    for (auto const& [k, v] : counts) {
      summary[k] = {{"checked", v.first}, {"failed", v.second}};
    }
    return {{"all_pass", r.all_pass()},
            {"n_checks", r.checks.size()},
            {"n_failed", r.n_failed()},
            {"summary", summary},
            {"checks", checks}};
  }

  inline json to_json(SapSample const& s) {
    json j{{"seed", s.seed},
           {"kind", s.kind},
           {"trial", s.trial},
           {"dim", s.coeffs.dim},
           {"plain", real_to_json(s.plain)},
           {"tensor", real_to_json(s.tensor)},
           {"ratio", real_to_json(s.ratio)}};
    if (s.trial > 0) {
      j["rows"] = s.rows;
      j["cols"] = s.cols;
    }
    if (s.error) {
      j["error"] = *s.error;
    }
    return j;
  }

  inline json to_json(SapReport const& r) {
    json witnesses = json::array();
    for (auto i : r.witnesses) {
      json w         = to_json(r.samples[i]);
      w["coeffs"]    = coeffs_to_json(r.samples[i].coeffs);
      witnesses.push_back(std::move(w));
    }
    json samples = json::array();
    for (auto const& s : r.samples) {
      samples.push_back(to_json(s));
    }
    return {{"plain", real_to_json(r.plain_norm)},
            {"tensor", real_to_json(r.tensor_norm)},
            {"ratio", real_to_json(r.ratio)},
            {"kappa_lb", real_to_json(r.kappa_lower_bound)},
            {"verdict", to_string(r.verdict)},
            {"tol", r.tol},
            {"seed", r.seed},
            {"dims", r.dims},
            {"n_samples", r.samples.size()},
            {"n_errors", r.n_errors},
            {"witnesses", witnesses},
            {"samples", samples}};
  }

  inline void write_sap_csv(std::ostream& os, SapReport const& r) {
    os << "index,seed,kind,trial,dim,plain,tensor,ratio\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
      auto const& s = r.samples[i];
      os << i << ',' << s.seed << ',' << s.kind << ',' << s.trial << ',' << s.coeffs.dim << ','
         << s.plain << ',' << s.tensor << ',' << s.ratio << '\n';
    }
  }

  inline json to_json(InequalityReport const& r) {
    json params = json::object();
    for (auto const& [k, v] : r.params) {
      params[k] = real_to_json(v);
    }
    return {{"lhs", r.lhs},
            {"rhs", r.rhs},
            {"allowance", r.allowance},
            {"slack", r.slack},
            {"holds", r.holds},
            {"params", params}};
  }

  inline json to_json(PoissonReport const& r) {
    return {{"r", r.r},
            {"N", r.N},
            {"trunc_hankel_norm", r.trunc_hankel_norm},
            {"closed_form", r.closed_form},
            {"cb_norm", r.cb_norm},
            {"matches", r.matches}};
  }

  inline json to_json(RestrictedReport const& r) {
    return {{"condition", r.condition},
            {"m", r.m},
            {"plain", r.plain},
            {"tensor", r.tensor},
            {"rel_diff", r.rel_diff},
            {"equal", r.equal}};
  }

  inline json to_json(TraceWordReport const& r) {
    return {{"n_words", r.n_words},
            {"dimension", r.dimension},
            {"all_closed", r.all_closed},
            {"all_in_range", r.all_in_range},
            {"max_trace", r.max_trace},
            {"bad_words", r.bad_words}};
  }

  inline json to_json(ReproductionRow const& r) {
    return {{"name", r.name},
            {"expected", real_to_json(r.expected)},
            {"computed", real_to_json(r.computed)},
            {"abs_error", real_to_json(r.abs_error)},
            {"tol", real_to_json(r.tol)},
            {"pass", r.pass},
            {"source", r.source}};
  }

  inline void write_reproduction_csv(std::ostream& os, std::vector<ReproductionRow> const& rows) {
    os << "name,expected,computed,abs_error,tol,pass\n";
    os << std::setprecision(17);
    for (auto const& r : rows) {
      os << r.name << ',' << r.expected << ',' << r.computed << ',' << r.abs_error << ',' << r.tol
         << ',' << (r.pass ? "true" : "false") << '\n';
    }
  }

  inline json to_json(SearchEntry const& e, std::size_t cols) {
    json grid = json::array();
    for (std::size_t i = 0; i < e.grid.size(); i += cols) {
      grid.push_back(std::vector<std::size_t>(e.grid.begin() + static_cast<std::ptrdiff_t>(i),
                                              e.grid.begin() + static_cast<std::ptrdiff_t>(i + cols)));
    }
    return {{"index", e.index},
            {"grid", grid},
            {"is_lunar", e.lunar},
            {"verdict", to_string(e.verdict)},
            {"kappa_lb", real_to_json(e.kappa_lb)}};
  }

  inline json to_json(SearchReport const& r) {
    auto const& c    = r.config;
    auto        pick = [&](std::vector<std::size_t> const& idx) {
      json out = json::array();
      for (auto i : idx) {
        out.push_back(to_json(r.entries[i], c.cols));
      }
      return out;
    };
    std::size_t n_lunar = 0;
    for (auto const& e : r.entries) {
      n_lunar += e.lunar ? 1 : 0;
    }
    return {{"rows", c.rows},
            {"cols", c.cols},
            {"labels", c.labels},
            {"seed", c.seed},
            {"samples", c.samples},
            {"dims", c.dims},
            {"budget", c.budget},
            {"cursor", c.cursor},
            {"next_cursor", r.cursor_end},
            {"exhausted", r.exhausted},
            {"order", "sequential"},
            {"n_examined", r.n_examined},
            {"n_canonical", r.entries.size()},
            {"n_lunar", n_lunar},
            {"flagged", pick(r.flagged)},
            {"candidates", pick(r.candidates)}};
  }

  // Stable text form: two-space indentation, trailing newline.
  inline std::string dump(json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace lunar

#endif  // LUNAR_IO_HPP_
