#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "salab/reproduce.hpp"

using namespace salab;

namespace {

void print(const AcceptanceItem& item) {
  std::printf("[%s] criterion %2d: %s %s\n", item.pass ? "PASS" : "FAIL", item.id, item.name.c_str(),
              item.detail.dump().c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : kDefaultReproduceSeed;
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (const auto& item : run_acceptance_items(seed, print)) all = all && item.pass;

  const auto first = dump(reproduce_paper(seed));
  const auto second = dump(reproduce_paper(seed));
  AcceptanceItem det{12, "reproduce-paper JSON byte-identical across two runs", first == second,
                     {{"bytes", first.size()}}};
  print(det);
  all = all && det.pass;

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s (%.1f s)\n", all ? "all acceptance criteria passed" : "acceptance FAILED", secs);
  return all ? 0 : 1;
}
