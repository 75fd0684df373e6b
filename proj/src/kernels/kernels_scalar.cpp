#include "ccral/kernels.hpp"

namespace ccral::kernels::scalar {

namespace {

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += a[j] * b[j];
    return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) y[j] += alpha * x[j];
}

double sqdist_skip(const double* a, const double* b, std::size_t n, std::size_t skip) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == skip) continue;
        const double d = a[j] - b[j];
        acc += d * d;
    }
    return acc;
}

}  // namespace

const Ops ops = {dot, axpy, sqdist_skip, "scalar"};

}  // namespace ccral::kernels::scalar
