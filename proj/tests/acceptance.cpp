// Acceptance criteria 1-10, one line per criterion.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "kantor/parallel.hpp"
#include "kantor/report.hpp"

int main(int argc, char** argv) {
  kantor::AcceptanceOptions opt;
  if (argc > 1) opt.classical_max_dim = std::strtoul(argv[1], nullptr, 10);
  std::cout << "acceptance: " << kantor::exceptional_catalog().size() << " exceptional entries, classical grid dim <= "
            << opt.classical_max_dim << ", " << kantor::thread_count() << " threads\n";
  bool all = true;
  kantor::run_acceptance(opt, [&](const kantor::CriterionResult& c) {
    all = all && c.pass;
    std::printf("criterion %2d: %s  %s [%zu checks, %.1fs]\n", c.number, c.pass ? "PASS" : "FAIL", c.title.c_str(), c.checks,
                c.seconds);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  });
  std::cout << (all ? "all criteria pass" : "some criteria failed") << '\n';
  return all ? 0 : 1;
}
