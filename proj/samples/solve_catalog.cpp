// Solves a small built-in instance under all three loss measures and prints
// the optima. Build and run:
//   ./samples/solve_catalog [name]
#include <iostream>

#include "mapr/generators.hpp"
#include "mapr/solvers.hpp"

int main(int argc, char** argv) {
  const std::string name = argc > 1 ? argv[1] : "intro";
  mapr::Instance inst;
  try {
    inst = mapr::catalog_instance(name);
  } catch (const mapr::Error& e) {
    std::cerr << e.what() << "\nknown names:";
    for (const auto& n : mapr::catalog_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }

  std::cout << name << ": " << inst.db.size() << " candidates, k=" << inst.k << "\n";
  for (mapr::LossKind kind :
       {mapr::LossKind::L1, mapr::LossKind::L1Max, mapr::LossKind::LMax}) {
    mapr::SolveReport report = mapr::brute_force(inst, kind, true);
    std::cout << "  " << mapr::to_string(kind) << " optimum " << mapr::to_string(report.loss_value)
              << " achieved by " << report.committees.size() << " committee(s), first:";
    for (int c : report.committees[0].members)
      std::cout << " " << inst.db.candidates[static_cast<std::size_t>(c)].name;
    std::cout << "\n";
  }
  return 0;
}
