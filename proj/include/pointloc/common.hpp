#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pointloc {

// Ternary sign values. kUnknown marks entries not yet determined.
inline constexpr int kMinus = -1;
inline constexpr int kZero = 0;
inline constexpr int kPlus = 1;
inline constexpr int kUnknown = 2;

using SignVector = std::vector<int>;

// Floating tolerances, centralized so tests can tighten or loosen them
// uniformly.
struct Tolerances {
    double eps_pd = 1e-12;     // positive-definiteness floor for inv_sqrt
    double eps_eig = 1e-9;     // eigenvalue absolute error target
    double eps_recon = 1e-8;   // inv_sqrt reconstruction (N*M*N vs I)
    double eps_sym = 1e-12;    // relative symmetry slack
    double eps_unit = 1e-9;    // |norm - 1| slack for unit vectors
    double eps_offdiag = 1e-12; // Jacobi off-diagonal stopping mass
};

inline const Tolerances& tolerances() {
    static const Tolerances t{};
    return t;
}

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPositiveDefinite : std::runtime_error {
    double lambda_min;
    explicit NotPositiveDefinite(double lmin)
        : std::runtime_error("matrix is not positive definite (lambda_min=" +
                             std::to_string(lmin) + ")"),
          lambda_min(lmin) {}
};

struct ConvergenceFailure : std::runtime_error {
    double best_achieved_c;
    int iterations;
    ConvergenceFailure(double best, int iters)
        : std::runtime_error("scaling iteration did not reach target c (best=" +
                             std::to_string(best) + ")"),
          best_achieved_c(best), iterations(iters) {}
};

struct DimensionTooFew : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentOracle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NodeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeGuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonRedundantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pointloc
