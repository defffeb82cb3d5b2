#include "mf/simd.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <mutex>

namespace mf::simd {

namespace {

using detail::Backend;

bool cpu_supports_avx2() {
#if defined(MF_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend* backend_by_name(const std::string& name) {
    if (name == "scalar") return &detail::scalar_backend();
#if defined(MF_HAVE_AVX2)
    if (name == "avx2" && cpu_supports_avx2()) return &detail::avx2_backend();
#endif
#if defined(MF_HAVE_NEON)
    if (name == "neon") return &detail::neon_backend();
#endif
    return nullptr;
}

const Backend* detect_backend() {
    if (const char* env = std::getenv("MF_SIMD"); env && *env && std::string(env) != "auto") {
        if (const Backend* b = backend_by_name(env)) return b;
        // Unknown or unsupported request: fall through to detection.
    }
#if defined(MF_HAVE_AVX2)
    if (cpu_supports_avx2()) return &detail::avx2_backend();
#endif
#if defined(MF_HAVE_NEON)
    return &detail::neon_backend();
#endif
    return &detail::scalar_backend();
}

std::atomic<const Backend*>& active_backend() {
    static std::atomic<const Backend*> active{detect_backend()};
    return active;
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    return active_backend().load(std::memory_order_relaxed)->dot(a.data(), b.data(), a.size());
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    return active_backend().load(std::memory_order_relaxed)->sqdist(a.data(), b.data(), a.size());
}

void axpy(double scale, std::span<const double> x, std::span<double> y) {
    assert(x.size() == y.size());
    active_backend().load(std::memory_order_relaxed)->axpy(scale, x.data(), y.data(), x.size());
}

std::string backend_name() {
    return active_backend().load(std::memory_order_relaxed)->name;
}

std::vector<std::string> available_backends() {
    std::vector<std::string> names{"scalar"};
#if defined(MF_HAVE_AVX2)
    if (cpu_supports_avx2()) names.emplace_back("avx2");
#endif
#if defined(MF_HAVE_NEON)
    names.emplace_back("neon");
#endif
    return names;
}

bool set_backend(const std::string& name) {
    const Backend* b = name == "auto" ? detect_backend() : backend_by_name(name);
    if (!b) return false;
    active_backend().store(b, std::memory_order_relaxed);
    return true;
}

}  // namespace mf::simd
