#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "mf/matrix.hpp"

namespace mf {

enum class KernelKind { Linear, Polynomial, Gaussian };

// Mercer kernel selector plus its hyperparameters. The Gaussian width is
// parameterized as a variance: k(x,z) = exp(-||x-z||^2 / (2*sigma2)).
struct KernelSpec {
    KernelKind kind = KernelKind::Linear;
    int degree = 1;       // Polynomial only, >= 1
    double offset = 0.0;  // Polynomial only, >= 0; 0 = homogeneous
    double sigma2 = 1.0;  // Gaussian only, > 0

    static KernelSpec linear() { return {KernelKind::Linear, 1, 0.0, 1.0}; }
    static KernelSpec polynomial(int degree, double offset);
    static KernelSpec gaussian(double sigma2);

    // Text form: "linear", "poly:<degree>:<offset>", "gauss:<sigma2>".
    std::string to_text() const;

    friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

// Parse result of the text form; "gauss:auto" defers the width to the
// dataset-driven heuristic and carries no usable sigma2 yet.
struct ParsedKernel {
    KernelSpec spec;
    bool gaussian_auto = false;
};

ParsedKernel parse_kernel_spec(const std::string& text);

// Validates invariants, throws std::invalid_argument on violation.
void validate_kernel_spec(const KernelSpec& spec);

// k(x, z). Checks dimensions and rejects non-finite components.
double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> z);

namespace detail {
// Unchecked evaluation for inner loops that validated their inputs up front.
double kernel_eval_raw(const KernelSpec& spec, std::span<const double> x, std::span<const double> z);
}  // namespace detail

// Gaussian width estimated from the quartiles of pairwise squared Euclidean
// distances over a seeded subsample of at most subsample_cap points.
struct Sigma2Heuristic {
    double sigma2;  // median of pairwise squared distances
    double q1;      // lower end of the admissible band
    double q3;      // upper end
};

Sigma2Heuristic heuristic_sigma2(const Matrix& samples, std::size_t subsample_cap, std::uint64_t seed);

}  // namespace mf
