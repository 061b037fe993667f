// Compares the OpenMP kernels against their serial references on the
// workloads that dominate the acceptance suite.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "dw/group.hpp"
#include "dw/hopf.hpp"
#include "dw/links.hpp"

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    auto g = dw::FiniteGroup::symmetric(4);
    auto pres = dw::surface_group_presentation(2);
    std::size_t count_serial = 0, count_parallel = 0;
    double ts = time_ms(
        [&] { count_serial = dw::enumerate_homs_serial(pres, g).size(); });
    double tp =
        time_ms([&] { count_parallel = dw::enumerate_homs(pres, g).size(); });
    if (count_serial != count_parallel) {
      std::fprintf(stderr, "hom enumeration mismatch!\n");
      return 1;
    }
    report("genus-2 homs over S4", ts, tp);
  }

  {
    auto g = dw::FiniteGroup::symmetric(4);
    dw::BraidWord braid{4, {1, 2, 3, 1, 2, 3, 1, 2}};
    std::uint64_t a = 0, b = 0;
    double ts = time_ms(
        [&] { a = dw::closure_count_serial(braid, g).raw_count; });
    double tp = time_ms([&] { b = dw::closure_count(braid, g).raw_count; });
    if (a != b) {
      std::fprintf(stderr, "closure count mismatch!\n");
      return 1;
    }
    report("8-letter braid closure over S4", ts, tp);
  }

  {
    // The associativity sweep is the heavy part of verify_hopf; the
    // other axioms are lower order. OpenMP shards the basis triples.
    auto g = dw::FiniteGroup::symmetric(4);
    dw::QuantumDouble qd(g);
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    double ts = time_ms([&] { (void)qd.verify_hopf(); });
    omp_set_num_threads(saved);
    double tp = time_ms([&] { (void)qd.verify_hopf(); });
    report("Hopf axiom suite over D(S4)", ts, tp);
  }

  return 0;
}
