#include <chrono>
#include <cstdio>
#include <string>

#include "ctk/analysis.hpp"
#include "ctk/dixon.hpp"
#include "ctk/families.hpp"
#include "ctk/permgroup.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Times each parallel kernel against its serial reference on a fixed
// workload and confirms the outputs agree.  Usage: bench_kernels [fixtures].

using namespace ctk;
using clk = std::chrono::steady_clock;

namespace {

template <class F>
double best_ms(F&& f, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = clk::now();
    f();
    auto t1 = clk::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* kernel, const char* workload, double serial,
         double parallel, bool match) {
  std::printf("%-22s %-18s %9.2f ms %9.2f ms %6.2fx  %s\n", kernel, workload,
              serial, parallel, serial / parallel, match ? "match" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::string fixtures = argc > 1 ? argv[1] : "fixtures";
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel kernels run serially\n");
#endif
  std::printf("%-22s %-18s %12s %12s %7s\n", "kernel", "workload", "serial",
              "parallel", "speedup");

  GroupData m12 = enumerate(load_gens(fixtures + "/m12.gens").generators);
  ClassCoeffs cs, cp;
  double s = best_ms([&] { cs = class_mult_coeffs(m12); });
  double p = best_ms([&] { cp = class_mult_coeffs_parallel(m12); });
  row("class_mult_coeffs", "M12 (|G|=95040)", s, p, cs.a == cp.a);

  GroupData m11 = enumerate(load_gens(fixtures + "/m11.gens").generators);
  ModularTable mt = modular_table(m11, make_context(m11));
  std::vector<std::vector<Cyclotomic>> ls, lp;
  s = best_ms([&] { ls = lift_values(m11, mt); });
  p = best_ms([&] { lp = lift_values_parallel(m11, mt); });
  row("lift_values", "M11 (10x10)", s, p, ls == lp);

  CharacterTable t = character_table(m11, "m11");
  std::vector<std::vector<ValueClass>> vs, vp;
  s = best_ms([&] { vs = classify_table(t); });
  p = best_ms([&] { vp = classify_table_parallel(t); });
  bool match = vs.size() == vp.size();
  for (size_t r = 0; match && r < vs.size(); ++r)
    for (size_t j = 0; match && j < vs[r].size(); ++j)
      match = vs[r][j].kind == vp[r][j].kind && vs[r][j].mean == vp[r][j].mean;
  row("classify_table", "M11 values", s, p, match);

  std::vector<int64_t> bs, bp;
  s = best_ms([&] { bs = l2_scan(4, 200000); });
  p = best_ms([&] { bp = l2_scan_parallel(4, 200000); });
  row("l2_scan", "q <= 2*10^5", s, p, bs == bp);
  return 0;
}
