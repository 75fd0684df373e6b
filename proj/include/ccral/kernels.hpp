#pragma once

#include <cstddef>

namespace ccral::kernels {

// Row-level arithmetic behind the two hot paths: full-batch gradient descent
// (dot/axpy over encoded rows) and the O(N^2 * d) counterfactual matching
// sweep (sqdist_skip). The scalar kernels are the reference semantics; SIMD
// variants are selected at runtime and must agree within rounding
// (tests/test_kernels.cpp).
struct Ops {
    // sum_j a[j] * b[j]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[j] += alpha * x[j]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // sum_{j != skip} (a[j] - b[j])^2, skip < n
    double (*sqdist_skip)(const double* a, const double* b, std::size_t n,
                          std::size_t skip);
    const char* name;
};

namespace scalar {
extern const Ops ops;
}

#if defined(__x86_64__) || defined(_M_X64)
#define CCRAL_KERNELS_X86 1
namespace avx2 {
extern const Ops ops;  // valid to call only when cpu_has_avx2()
}
bool cpu_has_avx2();
#else
#define CCRAL_KERNELS_X86 0
#endif

enum class Variant { auto_detect, scalar, avx2 };

// Dispatch table. Selected once on first use: CCRAL_KERNELS=scalar|avx2 in the
// environment wins, otherwise the best variant the CPU supports. force() is
// the test hook for exercising a specific variant.
const Ops& active();
void force(Variant v);

}  // namespace ccral::kernels
