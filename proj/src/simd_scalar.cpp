#include "mf/simd.hpp"

namespace mf::simd::detail {

namespace {

// Reference kernels. Left-to-right accumulation, no reassociation: results
// are reproducible and serve as ground truth for the vectorized backends.
double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sqdist_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void axpy_scalar(double s, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += s * x[i];
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", dot_scalar, sqdist_scalar, axpy_scalar};
    return backend;
}

}  // namespace mf::simd::detail
