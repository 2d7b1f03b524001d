// lunar_demo: walks a lunar window and the 3 x 3 checkerboard through the library.
#include <iomanip>
#include <iostream>

#include "lunar/lunar.hpp"

namespace {

  void show(char const* name, lunar::MapTable const& table) {
    std::cout << "== " << name << " (" << table.n_rows() << " x " << table.n_cols() << ", "
              << table.n_labels() << " labels)\n";

    auto report = lunar::check_lunar(table);
    std::cout << "lunar: " << (report.is_lunar ? "yes" : "no") << "\n";
    if (report.overlap_witness) {
      auto const& w = *report.overlap_witness;
      std::cout << "  Sol" << '(' << w.first_rep.first << ',' << w.first_rep.second << ") and Sol("
                << w.second_rep.first << ',' << w.second_rep.second << ") share ("
                << w.point.first << ',' << w.point.second << ")\n";
    }

    if (report.is_lunar) {
      auto fol      = lunar::build_foliation(table);
      auto diagrams = lunar::verify_absorption_diagrams(table);
      std::cout << "  classes: " << fol.classes.size() << ", diagram checks: "
                << diagrams.checks.size() << ", failed: " << diagrams.n_failed() << "\n";
    }

    lunar::SapConfig cfg;
    cfg.seed    = 7;
    auto sap    = lunar::sap_probe(lunar::build_hankel_system(table), cfg);
    std::cout << "  probe: " << lunar::to_string(sap.verdict) << ", kappa >= "
              << sap.kappa_lower_bound << "\n";
  }

}  // namespace

int main() {
  std::cout << std::setprecision(12);
  show("NatWindow{8}", lunar::nat_window(8));
  show("checkerboard", lunar::checkerboard3());

  for (int m : {1, 2}) {
    std::cout << "checkerboard 4 red + 2 orange - blue, level " << m << ": "
              << lunar::checkerboard_norm(m) << "\n";
  }
  return 0;
}
