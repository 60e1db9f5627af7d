// AVX2+FMA lane; this translation unit is compiled with -mavx2 -mfma and
// only ever entered after a runtime cpuid check.

#include "klab/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace klab::kernels {
namespace {

// Two complex doubles per __m256d, interleaved [re0 im0 re1 im1].
// (ar + i ai)(br + i bi): fmaddsub(ar, b, ai * swap(b)) puts ar*br - ai*bi
// in the even lane and ar*bi + ai*br in the odd lane.
inline __m256d cmul_acc(__m256d acc, __m256d are, __m256d aim, __m256d b) {
  __m256d swapped = _mm256_permute_pd(b, 0b0101);
  return _mm256_add_pd(acc,
                       _mm256_fmaddsub_pd(are, b, _mm256_mul_pd(aim, swapped)));
}

void matmul_avx2(std::size_t r, std::size_t k, std::size_t c, const cd* A,
                 const cd* B, cd* C) {
  std::fill(C, C + r * c, cd{});
  const auto* bd = reinterpret_cast<const double*>(B);
  auto* cdata = reinterpret_cast<double*>(C);
  std::size_t c2 = c & ~std::size_t{1};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      cd a = A[i * k + p];
      if (a == cd{}) continue;
      __m256d are = _mm256_set1_pd(a.real());
      __m256d aim = _mm256_set1_pd(a.imag());
      const double* brow = bd + 2 * p * c;
      double* crow = cdata + 2 * i * c;
      std::size_t j = 0;
      for (; j < c2; j += 2) {
        __m256d vb = _mm256_loadu_pd(brow + 2 * j);
        __m256d vc = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cmul_acc(vc, are, aim, vb));
      }
      for (; j < c; ++j) C[i * c + j] += a * B[p * c + j];
    }
  }
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sumsq_avx2(const cd* a, std::size_t n) {
  const auto* d = reinterpret_cast<const double*>(a);
  std::size_t len = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d v = _mm256_loadu_pd(d + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < len; ++i) s += d[i] * d[i];
  return s;
}

double diff_sumsq_avx2(const cd* a, const cd* b, std::size_t n) {
  const auto* da = reinterpret_cast<const double*>(a);
  const auto* db = reinterpret_cast<const double*>(b);
  std::size_t len = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(da + i), _mm256_loadu_pd(db + i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < len; ++i) {
    double diff = da[i] - db[i];
    s += diff * diff;
  }
  return s;
}

}  // namespace

namespace detail {

const Dispatch& avx2_dispatch() {
  static const Dispatch d{"avx2", matmul_avx2, sumsq_avx2, diff_sumsq_avx2};
  return d;
}

}  // namespace detail
}  // namespace klab::kernels
