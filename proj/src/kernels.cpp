#include "mf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "mf/random.hpp"
#include "mf/simd.hpp"

namespace mf {

namespace {

// Exact integer power; degree 1 returns the base unchanged so a degree-1
// homogeneous polynomial matches the linear kernel bit for bit.
double ipow(double base, int exponent) {
    double result = 1.0;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

void check_finite(std::span<const double> v, const char* which) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(std::string("kernel_eval: non-finite component in ") + which);
        }
    }
}

// Linear interpolation quantile over a sorted sample (numpy's default rule),
// so the median of an even-sized list is the mean of the two middle values.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

KernelSpec KernelSpec::polynomial(int degree, double offset) {
    KernelSpec spec{KernelKind::Polynomial, degree, offset, 1.0};
    validate_kernel_spec(spec);
    return spec;
}

KernelSpec KernelSpec::gaussian(double sigma2) {
    KernelSpec spec{KernelKind::Gaussian, 1, 0.0, sigma2};
    validate_kernel_spec(spec);
    return spec;
}

std::string KernelSpec::to_text() const {
    char buf[64];
    switch (kind) {
        case KernelKind::Linear:
            return "linear";
        case KernelKind::Polynomial:
            std::snprintf(buf, sizeof buf, "poly:%d:%.17g", degree, offset);
            return buf;
        case KernelKind::Gaussian:
            std::snprintf(buf, sizeof buf, "gauss:%.17g", sigma2);
            return buf;
    }
    throw std::logic_error("KernelSpec::to_text: bad kind");
}

void validate_kernel_spec(const KernelSpec& spec) {
    switch (spec.kind) {
        case KernelKind::Linear:
            return;
        case KernelKind::Polynomial:
            if (spec.degree < 1) throw std::invalid_argument("polynomial kernel: degree must be >= 1");
            if (!(spec.offset >= 0.0)) throw std::invalid_argument("polynomial kernel: offset must be >= 0");
            return;
        case KernelKind::Gaussian:
            if (!(spec.sigma2 > 0.0) || !std::isfinite(spec.sigma2)) {
                throw std::invalid_argument("gaussian kernel: sigma2 must be > 0");
            }
            return;
    }
    throw std::invalid_argument("kernel spec: bad kind");
}

ParsedKernel parse_kernel_spec(const std::string& text) {
    if (text == "linear") return {KernelSpec::linear(), false};
    if (text == "gauss:auto") return {{KernelKind::Gaussian, 1, 0.0, 1.0}, true};
    if (text.rfind("gauss:", 0) == 0) {
        std::size_t used = 0;
        const std::string arg = text.substr(6);
        const double s2 = std::stod(arg, &used);
        if (used != arg.size()) throw std::invalid_argument("kernel spec: bad sigma2 in '" + text + "'");
        return {KernelSpec::gaussian(s2), false};
    }
    if (text.rfind("poly:", 0) == 0) {
        const std::string rest = text.substr(5);
        const std::size_t colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("kernel spec: expected poly:<degree>:<offset>");
        std::size_t used = 0;
        const int degree = std::stoi(rest.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("kernel spec: bad degree in '" + text + "'");
        const std::string off = rest.substr(colon + 1);
        const double offset = std::stod(off, &used);
        if (used != off.size()) throw std::invalid_argument("kernel spec: bad offset in '" + text + "'");
        return {KernelSpec::polynomial(degree, offset), false};
    }
    throw std::invalid_argument("kernel spec: unrecognized '" + text + "'");
}

namespace detail {

double kernel_eval_raw(const KernelSpec& spec, std::span<const double> x, std::span<const double> z) {
    switch (spec.kind) {
        case KernelKind::Linear:
            return simd::dot(x, z);
        case KernelKind::Polynomial:
            return ipow(simd::dot(x, z) + spec.offset, spec.degree);
        case KernelKind::Gaussian:
            return std::exp(-simd::squared_distance(x, z) / (2.0 * spec.sigma2));
    }
    throw std::logic_error("kernel_eval_raw: bad kind");
}

}  // namespace detail

double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> z) {
    validate_kernel_spec(spec);
    if (x.empty() || x.size() != z.size()) {
        throw std::invalid_argument("kernel_eval: x and z must share a dimension >= 1");
    }
    check_finite(x, "x");
    check_finite(z, "z");
    return detail::kernel_eval_raw(spec, x, z);
}

Sigma2Heuristic heuristic_sigma2(const Matrix& samples, std::size_t subsample_cap, std::uint64_t seed) {
    if (samples.rows() < 2) throw std::invalid_argument("heuristic_sigma2: need at least 2 samples");
    if (subsample_cap < 2) throw std::invalid_argument("heuristic_sigma2: subsample_cap must be >= 2");

    std::vector<std::size_t> picked(samples.rows());
    std::iota(picked.begin(), picked.end(), 0);
    if (samples.rows() > subsample_cap) {
        Rng rng(mix_seed(seed, 0x5164'5354));
        rng.shuffle(picked);
        picked.resize(subsample_cap);
        std::sort(picked.begin(), picked.end());
    }

    std::vector<double> distances;
    distances.reserve(picked.size() * (picked.size() - 1) / 2);
    for (std::size_t i = 0; i < picked.size(); ++i) {
        for (std::size_t j = i + 1; j < picked.size(); ++j) {
            distances.push_back(simd::squared_distance(samples.row(picked[i]), samples.row(picked[j])));
        }
    }
    std::sort(distances.begin(), distances.end());

    Sigma2Heuristic h{};
    h.sigma2 = quantile_sorted(distances, 0.5);
    h.q1 = quantile_sorted(distances, 0.25);
    h.q3 = quantile_sorted(distances, 0.75);
    if (h.sigma2 <= 0.0) {
        throw std::runtime_error(distances.back() == 0.0
                                     ? "heuristic_sigma2: all sampled pairwise distances are zero"
                                     : "heuristic_sigma2: median pairwise distance is zero");
    }
    return h;
}

}  // namespace mf
