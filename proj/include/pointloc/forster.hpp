#pragma once

#include "pointloc/linalg.hpp"

namespace pointloc {

// Invertible rescaling bringing a set of directions to (approximate)
// isotropic position, with the achieved level recomputed from the output
// rather than trusted from the iteration.
struct ForsterCertificate {
    Mat transform;               // invertible d x d
    std::vector<double> scales;  // 1 / ||T h_i|| per input vector
    double achieved_c = 0.0;
    int iterations = 0;
};

// Fixed-point scaling: M <- second moment of current unit images,
// T <- inv_sqrt(d*M) * T, renormalized to unit determinant, until
// d*lambda_min >= target_c. Throws ConvergenceFailure(best_c) after
// max_iters sweeps or when an image moment goes singular, and
// DimensionTooFew when |H| < d.
ForsterCertificate forster_transform(const std::vector<Vec>& H, double target_c = 0.99,
                                     int max_iters = 10000);

// Unit images {T h / ||T h||} for the same list the certificate was built on.
std::vector<Vec> apply_certificate(const ForsterCertificate& cert, const std::vector<Vec>& H);

// Scaled originals {h / ||T h||}; inner products with x keep the signs of the
// untransformed queries.
std::vector<Vec> scaled_originals(const ForsterCertificate& cert, const std::vector<Vec>& H);

}  // namespace pointloc
