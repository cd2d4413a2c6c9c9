// Benchmark comparing the OpenMP nullspace against the serial reference on
// the kernel constraint systems of the bundled scenarios and on random
// sparse matrices. Results must agree exactly; timings are informational.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orbitgf/delta.hpp"
#include "orbitgf/matrix.hpp"
#include "orbitgf/scenario.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

orbitgf::QMatrix random_sparse(int rows, int cols, int per_row, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> col(0, cols - 1);
  std::uniform_int_distribution<int> val(-9, 9);
  orbitgf::QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < per_row; ++k) m.set(r, col(rng), orbitgf::Rational(val(rng)));
  return m;
}

void compare(const std::string& label, const orbitgf::QMatrix& m) {
  auto t0 = std::chrono::steady_clock::now();
  auto serial = orbitgf::nullspace_serial(m);
  double ts = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel = orbitgf::nullspace(m);
  double tp = seconds_since(t0);
  const bool same = serial == parallel;
  std::cout << label << ": " << m.rows() << "x" << m.cols() << " nnz " << m.nnz()
            << "  kernel " << serial.size() << "  serial " << ts << "s  parallel " << tp
            << "s  identical " << (same ? "yes" : "NO") << "\n";
  if (!same) std::exit(1);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; both paths run serially\n";
#endif

  using namespace orbitgf;
  {
    Scenario sc = builtin_scenario("gl3-subregular-real");
    for (int n : {6, 8, 10})
      compare("subregular order " + std::to_string(n),
              kernel_constraint_matrix(sc.fields, 4, n));
  }
  {
    Scenario sc = builtin_scenario("gl3-subregular-complex");
    std::vector<PolyVectorField> fields;
    for (const auto& cf : sc.complex_fields) {
      auto [v, iv] = realify_field(cf);
      fields.push_back(std::move(v));
      fields.push_back(std::move(iv));
    }
    for (int n : {3, 4, 5})
      compare("realified order " + std::to_string(n), kernel_constraint_matrix(fields, 8, n));
  }
  compare("random 400x300", random_sparse(400, 300, 4, 20240601));
  compare("random 900x700", random_sparse(900, 700, 5, 20240602));
  return 0;
}
