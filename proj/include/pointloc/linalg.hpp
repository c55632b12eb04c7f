#pragma once

#include <vector>

#include "pointloc/common.hpp"

namespace pointloc {

using Vec = std::vector<double>;

// Dense d x d matrix, row-major. Small dimensions only (d <= ~32).
class Mat {
  public:
    Mat() = default;
    explicit Mat(std::size_t d) : d_(d), a_(d * d, 0.0) {}

    static Mat identity(std::size_t d) {
        Mat m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return d_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

    bool is_symmetric(double eps_rel) const;

    Vec apply(const Vec& v) const;
    Mat multiply(const Mat& other) const;
    Mat transpose() const;
    double frobenius() const;
    // Determinant by partial-pivot LU.
    double det() const;
    // Gauss-Jordan inverse; throws InvalidInput on (numerically) singular input.
    Mat inverse() const;

  private:
    std::size_t d_ = 0;
    std::vector<double> a_;
};

struct EigenDecomposition {
    std::vector<double> values;   // ascending
    std::vector<Vec> vectors;     // vectors[i] pairs with values[i], unit norm
};

struct IsotropyReport {
    double lambda_min = 0.0;
    double measure = 0.0;  // d * lambda_min
    double c_level = 0.0;  // largest c with c-approximate isotropic position
};

double norm2(const Vec& v);
double dot(const Vec& a, const Vec& b);
Vec normalized(const Vec& v);

// (1/m) sum h h^T over the list. Rejects empty input and ragged dimensions.
Mat second_moment(const std::vector<Vec>& points);

// Full symmetric eigendecomposition by cyclic Jacobi rotations.
// Sweeps until the off-diagonal Frobenius mass drops below
// eps_offdiag * max(1, ||M||_F).
EigenDecomposition jacobi_eigen(const Mat& m);

double min_eigenvalue(const Mat& m);

// Symmetric N with N*M*N == I up to eps_recon (Frobenius).
// Throws NotPositiveDefinite when lambda_min(M) <= eps_pd.
Mat inv_sqrt(const Mat& m);

// Requires unit vectors (|norm - 1| <= eps_unit).
IsotropyReport isotropy_report(const std::vector<Vec>& points);

}  // namespace pointloc
