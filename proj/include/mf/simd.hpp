#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mf::simd {

// Vector primitives used by the kernel, SVM and MLP inner loops. Each has a
// scalar reference implementation plus optional AVX2/NEON variants selected
// once at startup. The scalar backend accumulates strictly left to right and
// is the reference the vectorized backends are equivalence-tested against.

double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

// y += scale * x
void axpy(double scale, std::span<const double> x, std::span<double> y);

// Name of the active backend: "scalar", "avx2" or "neon".
std::string backend_name();

// Backends compiled into this binary and usable on this CPU.
std::vector<std::string> available_backends();

// Select a backend by name ("auto" re-runs detection, which also honors the
// MF_SIMD environment variable). Returns false and leaves the selection
// unchanged if the backend is unavailable.
bool set_backend(const std::string& name);

namespace detail {
struct Backend {
    const char* name;
    double (*dot)(const double*, const double*, std::size_t);
    double (*sqdist)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
};

const Backend& scalar_backend();
#if defined(MF_HAVE_AVX2)
const Backend& avx2_backend();
#endif
#if defined(MF_HAVE_NEON)
const Backend& neon_backend();
#endif
}  // namespace detail

}  // namespace mf::simd
