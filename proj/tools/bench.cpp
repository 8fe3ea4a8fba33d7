// Timing comparison of the serial reference kernels against the OpenMP
// paths: Fock Gram assembly and the constrained-photon Gram. Exact
// arithmetic makes both paths bit-identical; this tool only reports time.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iqh/fock.hpp"
#include "iqh/gupta_bleuler.hpp"

using namespace iqh;

namespace {

double seconds(void (*body)(Execution), Execution exec) {
  auto start = std::chrono::steady_clock::now();
  body(exec);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

Execution g_check_exec = Execution::Serial;
HermitianMatrix g_reference;

void fock_gram_body(Execution exec) {
  QuantizationChoice choice{System::Scalar, Variant::PositiveFrequencyDestroys,
                            ModeSet::scalar_demo()};
  Quantization q = build_quantization(choice);
  std::vector<Ket> basis = level_basis(choice.modes, 4);
  HermitianMatrix gram = gram_matrix(basis, q.table, exec);
  if (exec == g_check_exec) {
    g_reference = gram;
  } else if (!(gram == g_reference)) {
    std::fprintf(stderr, "FATAL: serial and parallel Gram differ\n");
    std::exit(1);
  }
}

void gb_gram_body(Execution exec) {
  LightlikeMomentum k({1, 0, 0, 1});
  (void)positivity_report(7, k, exec);
}

void run_case(const char* name, void (*body)(Execution)) {
  double serial = seconds(body, Execution::Serial);
  double parallel = seconds(body, Execution::Parallel);
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel path falls back to serial\n");
#endif
  run_case("fock gram (scalar, level 4)", fock_gram_body);
  run_case("gb gram (n = 7)", gb_gram_body);
  return 0;
}
