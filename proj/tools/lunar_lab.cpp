// lunar_lab: command-line front end for the lunar-lab headers.
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lunar/lunar.hpp"

namespace {

  using lunar::json;

  constexpr int kOk      = 0;
  constexpr int kFailed  = 1;
  constexpr int kBadArgs = 2;

  json envelope(std::string const& command) {
    return {{"schema", lunar::kSchema}, {"command", command}};
  }

  int emit(json const& j, int code) {
    std::cout << lunar::dump(j);
    return code;
  }

  std::vector<std::string> split(std::string const& s, char sep) {
    std::vector<std::string> out;
    std::string              cur;
    std::istringstream       in(s);
    while (std::getline(in, cur, sep)) {
      out.push_back(cur);
    }
    return out;
  }

  double parse_real(std::string const& s) {
    if (s == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    try {
      std::size_t used = 0;
      double      v    = std::stod(s, &used);
      if (used != s.size()) {
        throw lunar::InputError("bad number '" + s + "'");
      }
      return v;
    } catch (std::logic_error const&) {
      throw lunar::InputError("bad number '" + s + "'");
    }
  }

  std::vector<double> parse_reals(std::string const& s) {
    std::vector<double> out;
    for (auto const& t : split(s, ',')) {
      out.push_back(parse_real(t));
    }
    return out;
  }

  // "1,0.5:-2,3" -> 1, 0.5 - 2i, 3
  lunar::SymbolSeq parse_symbol(std::string const& s) {
    lunar::SymbolSeq out;
    for (auto const& tok : split(s, ',')) {
      auto parts = split(tok, ':');
      if (parts.empty() || parts.size() > 2) {
        throw lunar::InputError("bad coefficient '" + tok + "'");
      }
      double const im = parts.size() == 2 ? parse_real(parts[1]) : 0.0;
      out.emplace_back(parse_real(parts[0]), im);
    }
    if (out.empty()) {
      throw lunar::InputError("empty coefficient list");
    }
    return out;
  }

  std::vector<lunar::SymbolSeq> parse_family(std::string const& s) {
    std::vector<lunar::SymbolSeq> out;
    for (auto const& part : split(s, ';')) {
      out.push_back(parse_symbol(part));
    }
    return out;
  }

  json symbol_json(lunar::SymbolSeq const& s) {
    json out = json::array();
    for (auto const& c : s) {
      out.push_back({c.real(), c.imag()});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////

  struct CheckArgs {
    std::string path;
    bool        brute = false;
  };

  int run_check(CheckArgs const& a) {
    auto table  = lunar::load_table(a.path);
    auto report = lunar::check_lunar(table, a.brute ? lunar::LunarMethod::brute
                                                    : lunar::LunarMethod::fast);
    auto j      = envelope("check");
    j["table"]  = {{"rows", table.n_rows()}, {"cols", table.n_cols()}, {"labels", table.n_labels()}};
    j["report"] = lunar::to_json(report);
    return emit(j, kOk);
  }

  int run_foliate(std::string const& path) {
    auto table = lunar::load_table(path);
    auto j     = envelope("foliate");
    try {
      auto fol         = lunar::build_foliation(table);
      auto diagrams    = lunar::verify_absorption_diagrams(table);
      j["foliation"]   = lunar::to_json(fol);
      j["diagrams"]    = lunar::to_json(diagrams);
      return emit(j, diagrams.all_pass() ? kOk : kFailed);
    } catch (lunar::NotLunar const& e) {
      std::cerr << "lunar_lab: " << e.what() << "\n";
      j["error"]   = "not-lunar";
      j["witness"] = e.witness();
      std::cout << lunar::dump(j);
      return kBadArgs;
    }
  }

  struct ProbeArgs {
    std::string         path;
    std::size_t         samples = 200;
    std::string         dims    = "1,2";
    std::uint64_t       seed    = 0;
    std::size_t         subsets = 0;
    bool                identity = false;
    bool                csv      = false;
  };

  std::vector<std::size_t> parse_dims(std::string const& s) {
    std::vector<std::size_t> out;
    for (auto const& t : split(s, ',')) {
      double const v = parse_real(t);
      if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw lunar::InputError("dimensions must be positive integers");
      }
      out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) {
      throw lunar::InputError("need at least one dimension");
    }
    return out;
  }

  int run_probe(ProbeArgs const& a) {
    auto           system = lunar::build_hankel_system(lunar::load_table(a.path));
    lunar::SapConfig cfg;
    cfg.n_samples        = a.samples;
    cfg.dims             = parse_dims(a.dims);
    cfg.seed             = a.seed;
    cfg.subset_trials    = a.subsets;
    cfg.include_identity = a.identity;
    auto report          = lunar::sap_probe(system, cfg);
    int const code       = report.n_errors > 0 ? kFailed : kOk;
    if (report.n_errors > 0) {
      std::cerr << "lunar_lab: " << report.n_errors << " samples failed to converge\n";
    }
    if (a.csv) {
      lunar::write_sap_csv(std::cout, report);
      return code;
    }
    auto j      = envelope("probe");
    j["report"] = lunar::to_json(report);
    return emit(j, code);
  }

  struct ReproduceArgs {
    bool          json = false;
    bool          csv  = false;
    std::uint64_t seed = 2024;
  };

  int run_reproduce(ReproduceArgs const& a) {
    auto rows = lunar::reproduction_table(a.seed);
    bool ok   = true;
    for (auto const& r : rows) {
      ok = ok && r.pass;
      if (!r.pass) {
        std::cerr << "lunar_lab: row " << r.name << " failed\n";
      }
    }
    int const code = ok ? kOk : kFailed;
    if (a.csv) {
      lunar::write_reproduction_csv(std::cout, rows);
      return code;
    }
    auto j    = envelope("reproduce");
    j["seed"] = a.seed;
    j["pass"] = ok;
    json list = json::array();
    for (auto const& r : rows) {
      list.push_back(lunar::to_json(r));
    }
    j["rows"] = std::move(list);
    return emit(j, code);
  }

  struct SearchArgs {
    lunar::SearchConfig cfg;
    std::string         dims = "1,2";
  };

  int run_search(SearchArgs a) {
    a.cfg.dims  = parse_dims(a.dims);
    auto report = lunar::search_tables(a.cfg);
    if (!report.exhausted) {
      std::cerr << "lunar_lab: budget reached, resume with --cursor " << report.cursor_end << "\n";
    }
    if (!report.flagged.empty()) {
      std::cerr << "lunar_lab: " << report.flagged.size()
                << " lunar tables were SAP-falsified; treat as a numerics bug\n";
    }
    auto j      = envelope("search");
    j["report"] = lunar::to_json(report);
    return emit(j, report.flagged.empty() ? kOk : kFailed);
  }

  ////////////////////////////////////////////////////////////////////////

  struct HardyArgs {
    std::string symbol;
    std::string other;
    std::string family;
    std::string sizes = "1,2,4,8,16,32,64,128,256,512,1024";
    std::string p     = "2";
    std::size_t N     = 0;
    double      r     = 0.5;
    std::size_t nodes = 4096;
    std::string radii;
    bool        csv = false;
  };

  void warn_truncation(lunar::SymbolSeq const& s, std::size_t N) {
    if (!lunar::truncation_is_exact(s, N)) {
      std::cerr << "lunar_lab: N = " << N << " truncates the symbol, coefficients beyond index "
                << 2 * N - 2 << " are dropped\n";
    }
  }

  std::size_t default_N(lunar::SymbolSeq const& s, std::size_t N) {
    return N > 0 ? N : s.size();
  }

  int run_hardy(std::string const& sub, HardyArgs const& a) {
    auto j   = envelope("hardy " + sub);
    int code = kOk;
    if (sub == "hankel") {
      auto const s = parse_symbol(a.symbol);
      auto const N = default_N(s, a.N);
      warn_truncation(s, N);
      j["symbol"]  = symbol_json(s);
      j["N"]       = N;
      j["norm"]    = lunar::spectral_norm(lunar::hankel_matrix(s, N));
      j["exact"]   = lunar::truncation_is_exact(s, N);
    } else if (sub == "bmoa") {
      auto const s = parse_symbol(a.symbol);
      auto const N = default_N(s, a.N);
      warn_truncation(s, N);
      double const p = parse_real(a.p);
      j["p"]       = lunar::real_to_json(p);
      j["N"]       = N;
      j["value"]   = lunar::bmoa_p_trunc(s, p, N);
      j["exact"]   = lunar::truncation_is_exact(s, N);
    } else if (sub == "fefferman") {
      auto const s = parse_symbol(a.symbol);
      auto const n = default_N(s, a.N);
      double const p = parse_real(a.p);
      j["p"]       = p;
      j["n_max"]   = n;
      j["value"]   = lunar::fefferman_block_functional(s, p, n);
    } else if (sub == "hilbert" && a.csv) {
      std::cout << "N,norm\n" << std::setprecision(17);
      for (auto [n, v] : lunar::hilbert_norm_sweep(parse_dims(a.sizes))) {
        std::cout << n << "," << v << "\n";
      }
      return kOk;
    } else if (sub == "poisson" && a.csv) {
      std::cout << "r,N,trunc_hankel_norm,closed_form,cb_norm,matches\n" << std::setprecision(17);
      for (double r : a.radii.empty() ? std::vector<double>{a.r} : parse_reals(a.radii)) {
        auto rep = lunar::poisson_cb_norm(r, a.N > 0 ? a.N : 5);
        std::cout << json(rep.r).dump() << "," << rep.N << "," << rep.trunc_hankel_norm << "," << rep.closed_form
                  << "," << rep.cb_norm << "," << (rep.matches ? "true" : "false") << "\n";
        code = rep.matches ? code : kFailed;
      }
      return code;
    } else if (sub == "hilbert") {
      json sweep = json::array();
      bool increasing = true;
      double prev     = 0.0;
      for (auto [n, v] : lunar::hilbert_norm_sweep(parse_dims(a.sizes))) {
        sweep.push_back({{"N", n}, {"norm", v}});
        increasing = increasing && v > prev;
        prev       = v;
      }
      j["sweep"]               = sweep;
      j["strictly_increasing"] = increasing;
    } else if (sub == "poisson") {
      auto rep   = lunar::poisson_cb_norm(a.r, a.N > 0 ? a.N : 5);
      j["report"] = lunar::to_json(rep);
      code        = rep.matches ? kOk : kFailed;
    } else if (sub == "holder") {
      auto const s = parse_symbol(a.symbol);
      auto rep   = lunar::hankel_holder_check(s, parse_symbol(a.other), parse_real(a.p),
                                              default_N(s, a.N));
      j["report"] = lunar::to_json(rep);
      code        = rep.holds ? kOk : kFailed;
    } else if (sub == "fourier-schur") {
      auto                   fam = parse_family(a.family);
      lunar::VectorSymbolSeq f;
      f.dim = fam.front().size();
      for (auto const& v : fam) {
        if (v.size() != f.dim) {
          throw lunar::InputError("vector coefficients must share one dimension");
        }
        f.coeffs.emplace_back(Eigen::Map<lunar::DenseVector const>(v.data(), static_cast<Eigen::Index>(v.size())));
      }
      auto rep    = lunar::fourier_schur_check(parse_symbol(a.symbol), f, {a.nodes, true});
      j["report"] = lunar::to_json(rep);
      code        = rep.holds ? kOk : kFailed;
    } else if (sub == "s4") {
      auto rep    = lunar::s4_hankel_check(parse_symbol(a.symbol), parse_family(a.family));
      j["report"] = lunar::to_json(rep);
      code        = rep.holds ? kOk : kFailed;
    } else {
      throw lunar::InputError("unknown hardy operation '" + sub + "'");
    }
    return emit(j, code);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lunar_lab: lunar maps, Hankel systems and self-absorption"};
  app.require_subcommand(1);

  CheckArgs check;
  auto*     c_check = app.add_subcommand("check", "decide the lunar condition for a table");
  c_check->add_option("table", check.path, "table JSON (grid or corpus spec)")->required();
  c_check->add_flag("--brute", check.brute, "literal eight-loop check");

  std::string foliate_path;
  auto*       c_foliate = app.add_subcommand("foliate", "coupled foliation and diagram checks");
  c_foliate->add_option("table", foliate_path, "table JSON")->required();

  ProbeArgs probe;
  auto*     c_probe = app.add_subcommand("probe", "randomized self-absorption probe");
  c_probe->add_option("table", probe.path, "table JSON")->required();
  c_probe->add_option("--samples", probe.samples, "random coefficient families")->capture_default_str();
  c_probe->add_option("--dims", probe.dims, "coefficient dimensions, comma separated")->capture_default_str();
  c_probe->add_option("--seed", probe.seed, "base seed")->capture_default_str();
  c_probe->add_option("--subsets", probe.subsets, "random compressions to probe")->capture_default_str();
  c_probe->add_flag("--identity", probe.identity, "add an identity term (square tables)");
  c_probe->add_flag("--csv", probe.csv, "per-sample CSV instead of JSON");

  ReproduceArgs repro;
  auto*         c_repro = app.add_subcommand("reproduce", "fixed reference values");
  auto*         fmt     = c_repro->add_option_group("format");
  fmt->add_flag("--json", repro.json, "JSON output (default)");
  fmt->add_flag("--csv", repro.csv, "CSV output");
  fmt->require_option(0, 1);
  c_repro->add_option("--seed", repro.seed, "seed of the randomized suites")->capture_default_str();

  SearchArgs search;
  auto*      c_search = app.add_subcommand("search", "enumerate small injective tables");
  c_search->add_option("--rows", search.cfg.rows)->capture_default_str();
  c_search->add_option("--cols", search.cfg.cols)->capture_default_str();
  c_search->add_option("--labels", search.cfg.labels)->capture_default_str();
  c_search->add_option("--budget", search.cfg.budget, "raw candidates to examine")->capture_default_str();
  c_search->add_option("--cursor", search.cfg.cursor, "raw candidates to skip")->capture_default_str();
  c_search->add_option("--seed", search.cfg.seed)->capture_default_str();
  c_search->add_option("--samples", search.cfg.samples, "probe samples per table")->capture_default_str();
  c_search->add_option("--dims", search.dims)->capture_default_str();

  std::string hardy_sub;
  HardyArgs   hardy;
  auto*       c_hardy = app.add_subcommand("hardy", "Hankel and Hardy space operations");
  c_hardy->add_option("operation", hardy_sub,
                      "hankel | bmoa | fefferman | hilbert | poisson | holder | fourier-schur | s4")
      ->required();
  c_hardy->add_option("--symbol", hardy.symbol, "coefficients re[:im], comma separated");
  c_hardy->add_option("--other", hardy.other, "second symbol (holder)");
  c_hardy->add_option("--family", hardy.family, "';'-separated coefficient lists");
  c_hardy->add_option("--sizes", hardy.sizes, "Hilbert truncation sizes")->capture_default_str();
  c_hardy->add_option("-p", hardy.p, "exponent, 'inf' allowed")->capture_default_str();
  c_hardy->add_option("-N", hardy.N, "truncation size");
  c_hardy->add_option("-r", hardy.r, "Poisson radius")->capture_default_str();
  c_hardy->add_option("--nodes", hardy.nodes, "quadrature nodes")->capture_default_str();
  c_hardy->add_option("--radii", hardy.radii, "Poisson radii, comma separated");
  c_hardy->add_flag("--csv", hardy.csv, "CSV sweep (hilbert, poisson)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (*c_check) return run_check(check);
    if (*c_foliate) return run_foliate(foliate_path);
    if (*c_probe) return run_probe(probe);
    if (*c_repro) return run_reproduce(repro);
    if (*c_search) return run_search(search);
    if (*c_hardy) return run_hardy(hardy_sub, hardy);
  } catch (lunar::InputError const& e) {
    std::cerr << "lunar_lab: " << e.what() << "\n";
    return kBadArgs;
  } catch (std::exception const& e) {
    std::cerr << "lunar_lab: " << e.what() << "\n";
    return kFailed;
  }
  return kBadArgs;
}
