#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "mf/kernels.hpp"
#include "mf/matrix.hpp"

namespace mf {

struct SmoConfig {
    double c_reg = 1.0;          // box constraint C on the dual multipliers
    KernelSpec kernel = KernelSpec::linear();
    double kkt_tolerance = 1e-3; // must lie in (0, 1)
    int max_passes = 0;          // 0 = auto (10 * sample count)
    std::uint64_t seed = 0;      // drives the random working-pair fallback
    std::size_t cache_rows = 256;  // LRU kernel rows kept when n > full_cache_limit
    std::size_t full_cache_limit = 4096;  // full Gram cache up to this many samples
};

struct SvmTrainingStats {
    long iterations = 0;   // accepted two-multiplier steps
    int passes = 0;        // outer sweeps over the working set
    double dual_objective = 0.0;
    std::vector<double> objective_trace;  // dual objective checkpoint per pass
};

// Soft-margin binary SVM in support-vector expansion form:
//   f(x) = sum_j coefficients[j] * k(sv_j, x) + bias,  coefficients[j] = alpha_j * y_j.
struct BinarySvmModel {
    std::size_t dim = 0;
    KernelSpec kernel = KernelSpec::linear();
    Matrix support_vectors;            // one row per retained point (alpha > 0)
    std::vector<double> coefficients;  // signed, nonzero, |coef| <= C used at training
    double bias = 0.0;
    SvmTrainingStats training_stats;
};

// Linear machine collapsed to a single weight vector, sign(theta . x + bias).
struct CompactLinearModel {
    std::vector<double> theta;
    double bias = 0.0;

    double output(std::span<const double> x) const;
};

// Raised when the solver exceeds its pass budget; carries the best dual
// objective reached so the caller can log the partial result.
class SmoConvergenceError : public std::runtime_error {
public:
    SmoConvergenceError(const std::string& what, double best_objective)
        : std::runtime_error(what), best_dual_objective(best_objective) {}
    double best_dual_objective;
};

// Platt-style SMO on the dual. Labels must be exactly +1/-1 with at least one
// of each. Converges when a full sweep finds no KKT violator beyond
// kkt_tolerance; throws SmoConvergenceError past the pass budget.
BinarySvmModel smo_train(const Matrix& samples, const std::vector<int>& labels, const SmoConfig& config);

// Raw margin value of the Eq-style expansion (pre-sign).
double svm_output(const BinarySvmModel& model, std::span<const double> x);

// Sign decision with sgn(0) = +1.
int svm_decide(const BinarySvmModel& model, std::span<const double> x);

// Collapses a linear-kernel model into compact form. Throws on non-linear kernels.
CompactLinearModel compact_linear(const BinarySvmModel& model);

// Largest violation of the three-case KKT conditions over the training set;
// a trained model should keep this at or below its kkt_tolerance.
double kkt_max_violation(const BinarySvmModel& model, const Matrix& samples,
                         const std::vector<int>& labels, double c_reg);

// Versioned line-oriented text format; doubles at 17 significant digits.
void save_svm_model(const BinarySvmModel& model, std::ostream& out);
BinarySvmModel load_svm_model(std::istream& in);
void save_svm_model_file(const BinarySvmModel& model, const std::string& path);
BinarySvmModel load_svm_model_file(const std::string& path);

}  // namespace mf
