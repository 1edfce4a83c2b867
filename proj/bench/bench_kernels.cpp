// Serial reference vs OpenMP kernels: integration walk and root isolation.
// Prints wall time per variant and checks the outputs are identical.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "padicert/haar.hpp"
#include "padicert/roots.hpp"

using namespace padicert;

namespace {

double seconds(const std::function<void()>& body, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

bool bench_integrate(const char* label, const PolyDensity& d, const Integer& p, long depth) {
  const Cylinder region = Cylinder::unit_polydisc(p, d.f.nvars());
  IntegrationResult serial, parallel;
  const double ts = seconds([&] { serial = integrate(d, region, depth, Execution::Serial); }, 3);
  const double tp = seconds([&] { parallel = integrate(d, region, depth, Execution::Parallel); }, 3);
  const bool same = serial.ledger == parallel.ledger && serial.value == parallel.value;
  std::printf("integrate %-28s p=%s D=%-3ld serial %9.4f s  parallel %9.4f s  speedup %5.2f  %s\n", label,
              p.get_str().c_str(), depth, ts, tp, ts / tp, same ? "identical" : "MISMATCH");
  return same;
}

bool bench_isolate(const char* label, const IntPolynomial& f, const Rational& eps) {
  std::vector<ComplexBox> serial, parallel;
  const double ts = seconds([&] { serial = isolate_roots(f, eps, {Execution::Serial}); }, 3);
  const double tp = seconds([&] { parallel = isolate_roots(f, eps, {Execution::Parallel}); }, 3);
  const bool same = serial == parallel;
  std::printf("isolate   %-28s          serial %9.4f s  parallel %9.4f s  speedup %5.2f  %s\n", label, ts, tp,
              ts / tp, same ? "identical" : "MISMATCH");
  return same;
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
  bool ok = true;
  ok &= bench_integrate("|x^2 - 1|", {MPoly::parse("x^2 - 1"), 1}, 3, 40);
  ok &= bench_integrate("|x^2 + y^2 - 2|^(1/2)", {MPoly::parse("x^2 + y^2 - 2"), 2}, 3, 8);
  ok &= bench_integrate("|x y - 1|", {MPoly::parse("x*y - 1"), 1}, 3, 9);
  ok &= bench_isolate("Lehmer, eps 2^-30", IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, Rational(1, 1 << 30));
  ok &= bench_isolate("x^24 - 3x + 1, eps 2^-20", IntPolynomial::parse("x^24 - 3x + 1"), Rational(1, 1 << 20));
  return ok ? 0 : 1;
}
