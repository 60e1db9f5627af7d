#pragma once

#include <complex>
#include <cstddef>

namespace klab::kernels {

using cd = std::complex<double>;

// Row-major dense complex kernels. C (r x c) = A (r x k) * B (k x c);
// C must not alias A or B.
struct Dispatch {
  const char* name;
  void (*matmul)(std::size_t r, std::size_t k, std::size_t c, const cd* A,
                 const cd* B, cd* C);
  double (*sumsq)(const cd* a, std::size_t n);              // sum |a_i|^2
  double (*diff_sumsq)(const cd* a, const cd* b, std::size_t n);
};

const Dispatch& scalar_kernels();

// AVX2+FMA variants; nullptr when the build or the CPU lacks them.
const Dispatch* avx2_kernels();

// Lane picked once per process: KLAB_KERNELS=scalar|avx2 overrides,
// otherwise AVX2 when the CPU supports it and scalar elsewhere. Throws
// domain_error if the override names an unavailable lane.
const Dispatch& active();

}  // namespace klab::kernels
