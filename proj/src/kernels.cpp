#include "klab/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "klab/error.hpp"

namespace klab::kernels {

namespace {

void matmul_scalar(std::size_t r, std::size_t k, std::size_t c, const cd* A,
                   const cd* B, cd* C) {
  std::fill(C, C + r * c, cd{});
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      cd a = A[i * k + p];
      if (a == cd{}) continue;
      const cd* brow = B + p * c;
      cd* crow = C + i * c;
      for (std::size_t j = 0; j < c; ++j) crow[j] += a * brow[j];
    }
  }
}

double sumsq_scalar(const cd* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return s;
}

double diff_sumsq_scalar(const cd* a, const cd* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double re = a[i].real() - b[i].real();
    double im = a[i].imag() - b[i].imag();
    s += re * re + im * im;
  }
  return s;
}

}  // namespace

const Dispatch& scalar_kernels() {
  static const Dispatch d{"scalar", matmul_scalar, sumsq_scalar,
                          diff_sumsq_scalar};
  return d;
}

#ifdef KLAB_HAVE_AVX2_TU
namespace detail {
const Dispatch& avx2_dispatch();  // defined in kernels_avx2.cpp
}
#endif

const Dispatch* avx2_kernels() {
#ifdef KLAB_HAVE_AVX2_TU
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return &detail::avx2_dispatch();
#endif
  return nullptr;
}

const Dispatch& active() {
  static const Dispatch& chosen = []() -> const Dispatch& {
    const char* env = std::getenv("KLAB_KERNELS");
    std::string want = env ? env : "";
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2") {
      if (const Dispatch* d = avx2_kernels()) return *d;
      throw domain_error("KLAB_KERNELS=avx2 but the avx2 lane is unavailable "
                         "on this build/CPU");
    }
    if (!want.empty())
      throw domain_error("KLAB_KERNELS must be 'scalar' or 'avx2', got '" +
                         want + "'");
    if (const Dispatch* d = avx2_kernels()) return *d;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace klab::kernels
