// Compares the OpenMP kernels against their serial reference on the three
// hot paths (matrix product, reduced echelon form, algebra product) and on
// batch KEM cycles, checking that both sides produce identical results.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "galrpc/kem.hpp"

using namespace galrpc;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

Matrix random_matrix(const std::shared_ptr<const Field>& f, std::size_t rows,
                     std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f->sample(rng);
  return m;
}

void report(const char* name, double serial_s, double parallel_s) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed
            << std::setprecision(3) << std::setw(10) << serial_s << " s"
            << std::setw(10) << parallel_s << " s" << std::setw(9)
            << std::setprecision(2) << serial_s / parallel_s << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: not enabled in this build\n";
#endif
  std::cout << std::left << std::setw(28) << "kernel" << std::right
            << std::setw(12) << "serial" << std::setw(12) << "parallel"
            << std::setw(9) << "speedup\n";

  Rng rng = seeded_rng(42);

  {
    const std::size_t n = quick ? 24 : 128;
    auto f = Field::make(2, 32);
    Matrix a = random_matrix(f, n, n, rng);
    Matrix b = random_matrix(f, n, n, rng);
    double t0 = now_s();
    Matrix ref = serial::mat_mul(a, b);
    double t1 = now_s();
    Matrix par = mat_mul(a, b);
    double t2 = now_s();
    if (!(ref == par)) {
      std::cerr << "mat_mul: serial and parallel kernels disagree\n";
      return 1;
    }
    report("mat_mul", t1 - t0, t2 - t1);
  }

  {
    const std::size_t rows = quick ? 24 : 128;
    const std::size_t cols = 2 * rows;
    auto f = Field::make(2, 32);
    Matrix a = random_matrix(f, rows, cols, rng);
    double t0 = now_s();
    RrefResult ref = serial::rref(a);
    double t1 = now_s();
    RrefResult par = rref(a);
    double t2 = now_s();
    if (!(ref.rref == par.rref) || ref.rank != par.rank) {
      std::cerr << "rref: serial and parallel kernels disagree\n";
      return 1;
    }
    report("rref", t1 - t0, t2 - t1);
  }

  {
    const unsigned reps = quick ? 50 : 2000;
    auto f = Field::make(2, 32);
    GroupAlgebra ctx(f, Group::dihedral(32));  // order 64
    AlgebraElement a = ctx.sample(rng);
    AlgebraElement b = ctx.sample(rng);
    AlgebraElement acc_ref = ctx.zero();
    double t0 = now_s();
    for (unsigned i = 0; i < reps; ++i) acc_ref = acc_ref + serial::ga_mul(a, b);
    double t1 = now_s();
    AlgebraElement acc_par = ctx.zero();
    for (unsigned i = 0; i < reps; ++i) acc_par = acc_par + a * b;
    double t2 = now_s();
    if (!(acc_ref == acc_par)) {
      std::cerr << "ga_mul: serial and parallel kernels disagree\n";
      return 1;
    }
    report("ga_mul (batched)", t1 - t0, t2 - t1);
  }

  {
    // Trial-level parallelism, the shape used by bench-dfr.
    const std::uint64_t trials = quick ? 4 : 64;
    KemParams params =
        make_kem_params(GroupAlgebra(Field::make(2, 31), Group::dihedral(7)),
                        3, 2);
    auto run_trial = [&](std::uint64_t i) {
      Rng trial_rng = derive_rng(7, i);
      KeyPair kp = keygen(params, trial_rng);
      EncapResult enc = encap(kp.pk, trial_rng);
      auto key = decap(kp.sk, enc.ct);
      return key && *key == enc.key ? 1u : 0u;
    };
    std::uint64_t ok_serial = 0;
    double t0 = now_s();
    for (std::uint64_t i = 0; i < trials; ++i) ok_serial += run_trial(i);
    double t1 = now_s();
    std::uint64_t ok_parallel = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok_parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i)
      ok_parallel += run_trial(static_cast<std::uint64_t>(i));
    double t2 = now_s();
    if (ok_serial != ok_parallel) {
      std::cerr << "kem trials: serial and parallel runs disagree\n";
      return 1;
    }
    report("kem cycle batch", t1 - t0, t2 - t1);
  }

  return 0;
}
