// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma on
// x86-64 only; the dispatcher guards every call with cpu_has_avx2().
#include "ccral/kernels.hpp"

#if CCRAL_KERNELS_X86

#include <immintrin.h>

namespace ccral::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + j + 4), _mm256_loadu_pd(b + j + 4), acc1);
    }
    for (; j + 4 <= n; j += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < n; ++j) acc += a[j] * b[j];
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d vy = _mm256_loadu_pd(y + j);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + j), vy);
        _mm256_storeu_pd(y + j, vy);
    }
    for (; j < n; ++j) y[j] += alpha * x[j];
}

// Full squared distance minus the skipped coordinate's term. The subtraction
// is exact whenever the skipped lanes are equal (the matching case), because
// the remaining terms accumulate zeros.
double sqdist_skip(const double* a, const double* b, std::size_t n, std::size_t skip) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + j + 4), _mm256_loadu_pd(b + j + 4));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    for (; j + 4 <= n; j += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j));
        acc0 = _mm256_fmadd_pd(d, d, acc0);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < n; ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
    }
    const double ds = a[skip] - b[skip];
    return acc - ds * ds;
}

}  // namespace

const Ops ops = {dot, axpy, sqdist_skip, "avx2"};

}  // namespace ccral::kernels::avx2

namespace ccral::kernels {

bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace ccral::kernels

#endif  // CCRAL_KERNELS_X86
