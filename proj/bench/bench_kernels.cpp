// Serial vs OpenMP timings for the two parallel kernels: mountain-range rows
// and certification frontier expansion.
//
//   bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "legtorus/parallel.hpp"
#include "legtorus/search.hpp"

using namespace legtorus;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.2f %10.2f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", max_threads());
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  for (const TorusKnotType& t : {TorusKnotType{Ambient::Jet, -41, 6},
                                 TorusKnotType{Ambient::S1xS2, 7, 12}}) {
    const std::int64_t depth = 400;
    const std::int64_t window = 400;
    std::vector<MountainRow> a, b;
    const double s = best_of(repeats, [&] { a = mountain_range_serial(t, depth, window); });
    const double p = best_of(repeats, [&] { b = mountain_range(t, depth, window); });
    const std::string name = "mountain_range " + to_string(t);
    row(name.c_str(), s, p, a == b);
  }

  const FrontWord looped = apply_move(zero_section(), {Rule::R1aAdd, 0, 1});
  const std::vector<std::pair<FrontWord, FrontWord>> pairs{
      {stabilize_front(looped, Sign::Plus, 1, 0), stabilize_front(looped, Sign::Plus, 3, 1)},
      {stabilize_front(positive_braid(2, 3), Sign::Plus, 1, 0),
       stabilize_front(positive_braid(2, 3), Sign::Plus, 3, 2)},
  };
  int k = 0;
  for (const auto& [x, y] : pairs) {
    SearchOptions serial;
    serial.parallel = false;
    serial.budget = 200000;
    SearchOptions parallel = serial;
    parallel.parallel = true;
    Certificate a, b;
    const double s = best_of(repeats, [&] { a = certify_isotopic(x, y, serial); });
    const double p = best_of(repeats, [&] { b = certify_isotopic(x, y, parallel); });
    bool same = a.index() == b.index();
    if (same && a.index() == 0) same = std::get<0>(a).path == std::get<0>(b).path;
    const char* verdict = a.index() == 0 ? "equivalent" : a.index() == 1 ? "distinct" : "inconclusive";
    const std::string name = "certify pair " + std::to_string(++k) + " (" + verdict + ")";
    row(name.c_str(), s, p, same);
  }
  return 0;
}
