#include <chrono>
#include <cstdlib>
#include <iostream>

#include "rgbk/search.hpp"

// Times the threaded search driver against the serial reference on the same
// config and checks that both produce the identical report.

namespace {

template <typename F>
double seconds(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  rgbk::SearchConfig cfg;
  cfg.mode = argc > 2 ? argv[2] : "random-tournaments";
  cfg.n = 10;
  cfg.trials = argc > 1 ? std::atoll(argv[1]) : 20000;
  cfg.seed = 7;

  rgbk::SearchReport serial, parallel;
  double t_serial = seconds([&] { serial = rgbk::run_search_serial(cfg); });
  double t_parallel = seconds([&] { parallel = rgbk::run_search(cfg); });

  if (serial.to_json() != parallel.to_json()) {
    std::cerr << "FAIL: serial and parallel reports differ\n";
    return 1;
  }
  std::cout << "mode " << cfg.mode << ", trials " << cfg.trials << "\n";
  std::cout << "serial   " << t_serial << " s\n";
  std::cout << "parallel " << t_parallel << " s\n";
  std::cout << "speedup  " << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x\n";
  std::cout << "reports identical\n";
  return 0;
}
