// Serial reference kernels against their OpenMP counterparts.
// usage: bench_kernels [max_size]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "torsam/homology.hpp"
#include "torsam/linalg.hpp"
#include "torsam/module_ops.hpp"
#include "torsam/parse.hpp"

using namespace torsam;

namespace {

template <class Fn>
double seconds(Fn&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

// rank about n/2 with a few sparse rows, so elimination does real work
DenseMatrix random_matrix(const PrimeField& f, int n, std::mt19937_64& rng, double density) {
  DenseMatrix m(n, n);
  std::uniform_real_distribution<double> u(0, 1);
  for (int r = 0; r < n / 2; ++r)
    for (int c = 0; c < n; ++c)
      if (u(rng) < density) m.at(r, c) = static_cast<Scalar>(rng() % f.characteristic());
  for (int r = n / 2; r < n; ++r) {  // combinations of the first half
    Scalar a = static_cast<Scalar>(rng() % f.characteristic()), b = static_cast<Scalar>(rng() % f.characteristic());
    int s = static_cast<int>(rng() % (n / 2)), t = static_cast<int>(rng() % (n / 2));
    for (int c = 0; c < n; ++c) m.at(r, c) = f.add(f.mul(a, m.at(s, c)), f.mul(b, m.at(t, c)));
  }
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  int max_size = argc > 1 ? std::atoi(argv[1]) : 800;
  PrimeField f;
  std::mt19937_64 rng(1);
  int threads = omp_get_max_threads();
  std::printf("threads available: %d\n\n", threads);
  std::printf("%-6s %-8s %10s %10s %10s  %s\n", "size", "density", "serial", "parallel", "sparse", "ranks");
  for (int n = 100; n <= max_size; n *= 2) {
    for (double density : {1.0, 0.05}) {
      DenseMatrix m = random_matrix(f, n, rng, density);
      int rs = 0, rp = 0, rsp = 0;
      double ts = seconds([&] { rs = rank_serial(f, m); });
      double tp = seconds([&] { rp = rank_parallel(f, m); });
      double tsp = seconds([&] { rsp = rank_sparse(f, m); });
      std::printf("%-6d %-8.2f %9.4fs %9.4fs %9.4fs  %d %d %d%s\n", n, density, ts, tp, tsp, rs, rp, rsp,
                  rs == rp && rp == rsp ? "" : "  MISMATCH");
    }
  }

  // degreewise Tor: the loop over internal degrees is the parallel region
  auto R = make_ring("x,y,z", "x^2 - y*z", f);
  auto M = quotient_by_power(make_module(R, {0, 0}, {{"x", "y"}, {"z", "x"}}), 6);
  auto X = quotient_by_power(ModulePresentation::free(R, {0}), 7);
  std::printf("\nTor_i(M, X) over k[x,y,z]/(x^2-yz), M and X truncated\n");
  std::printf("%-3s %10s %10s  %s\n", "i", "1 thread", "all", "lengths");
  for (int i = 1; i <= 3; ++i) {
    long long a = 0, b = 0;
    omp_set_num_threads(1);
    double t1 = seconds([&] { a = tor_length(M, X, i); }, 1);
    omp_set_num_threads(threads);
    double tn = seconds([&] { b = tor_length(M, X, i); }, 1);
    std::printf("%-3d %9.4fs %9.4fs  %lld %lld%s\n", i, t1, tn, a, b, a == b ? "" : "  MISMATCH");
  }
  return 0;
}
