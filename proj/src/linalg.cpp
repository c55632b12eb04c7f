#include "pointloc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pointloc {

bool Mat::is_symmetric(double eps_rel) const {
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = i + 1; j < d_; ++j) {
            double diff = std::fabs((*this)(i, j) - (*this)(j, i));
            double scale = std::max(1.0, std::fabs((*this)(i, j)));
            if (diff > eps_rel * scale) return false;
        }
    return true;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != d_) throw DimensionMismatch("matrix-vector dimension mismatch");
    Vec out(d_, 0.0);
    for (std::size_t i = 0; i < d_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Mat Mat::multiply(const Mat& other) const {
    if (other.d_ != d_) throw DimensionMismatch("matrix-matrix dimension mismatch");
    Mat out(d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t k = 0; k < d_; ++k) {
            double v = (*this)(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < d_; ++j) out(i, j) += v * other(k, j);
        }
    return out;
}

Mat Mat::transpose() const {
    Mat out(d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

double Mat::frobenius() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double Mat::det() const {
    std::vector<double> lu(a_);
    const std::size_t d = d_;
    double sign = 1.0;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < d; ++r)
            if (std::fabs(lu[r * d + c]) > std::fabs(lu[p * d + c])) p = r;
        if (lu[p * d + c] == 0.0) return 0.0;
        if (p != c) {
            for (std::size_t j = 0; j < d; ++j) std::swap(lu[p * d + j], lu[c * d + j]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < d; ++r) {
            double f = lu[r * d + c] / lu[c * d + c];
            lu[r * d + c] = f;
            for (std::size_t j = c + 1; j < d; ++j) lu[r * d + j] -= f * lu[c * d + j];
        }
    }
    double det = sign;
    for (std::size_t i = 0; i < d; ++i) det *= lu[i * d + i];
    return det;
}

Mat Mat::inverse() const {
    const std::size_t d = d_;
    std::vector<double> aug(d * 2 * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i * 2 * d + j] = (*this)(i, j);
        aug[i * 2 * d + d + i] = 1.0;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < d; ++r)
            if (std::fabs(aug[r * 2 * d + c]) > std::fabs(aug[p * 2 * d + c])) p = r;
        if (aug[p * 2 * d + c] == 0.0) throw InvalidInput("singular matrix in inverse()");
        if (p != c)
            for (std::size_t j = 0; j < 2 * d; ++j) std::swap(aug[p * 2 * d + j], aug[c * 2 * d + j]);
        double piv = aug[c * 2 * d + c];
        for (std::size_t j = 0; j < 2 * d; ++j) aug[c * 2 * d + j] /= piv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c) continue;
            double f = aug[r * 2 * d + c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < 2 * d; ++j) aug[r * 2 * d + j] -= f * aug[c * 2 * d + j];
        }
    }
    Mat out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out(i, j) = aug[i * 2 * d + d + j];
    return out;
}

double norm2(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec normalized(const Vec& v) {
    double n = norm2(v);
    if (n == 0.0) throw InvalidInput("cannot normalize zero vector");
    Vec out(v);
    for (double& x : out) x /= n;
    return out;
}

Mat second_moment(const std::vector<Vec>& points) {
    if (points.empty()) throw InvalidInput("second_moment: empty point list");
    const std::size_t d = points[0].size();
    if (d == 0) throw InvalidInput("second_moment: zero-dimensional points");
    Mat m(d);
    for (const Vec& h : points) {
        if (h.size() != d) throw DimensionMismatch("second_moment: ragged dimensions");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i, j) += h[i] * h[j];
    }
    const double inv_m = 1.0 / static_cast<double>(points.size());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) *= inv_m;
    return m;
}

namespace {

double offdiag_mass(const Mat& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i + 1; j < m.dim(); ++j) s += 2.0 * m(i, j) * m(i, j);
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const Mat& input) {
    const Tolerances& tol = tolerances();
    if (!input.is_symmetric(tol.eps_sym))
        throw InvalidInput("jacobi_eigen: matrix is not symmetric");
    const std::size_t d = input.dim();
    Mat a = input;
    Mat v = Mat::identity(d);
    const double stop = tol.eps_offdiag * std::max(1.0, input.frobenius());

    // Cyclic sweeps; each rotation zeroes one off-diagonal pair.
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && offdiag_mass(a) > stop; ++sweep) {
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < d; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    EigenDecomposition out;
    out.values.resize(d);
    out.vectors.resize(d);
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    for (std::size_t i = 0; i < d; ++i) {
        out.values[i] = a(order[i], order[i]);
        Vec col(d);
        for (std::size_t k = 0; k < d; ++k) col[k] = v(k, order[i]);
        out.vectors[i] = col;
    }
    return out;
}

double min_eigenvalue(const Mat& m) { return jacobi_eigen(m).values.front(); }

Mat inv_sqrt(const Mat& m) {
    const Tolerances& tol = tolerances();
    EigenDecomposition eig = jacobi_eigen(m);
    if (eig.values.front() <= tol.eps_pd) throw NotPositiveDefinite(eig.values.front());
    const std::size_t d = m.dim();
    Mat out(d);
    for (std::size_t k = 0; k < d; ++k) {
        double w = 1.0 / std::sqrt(eig.values[k]);
        const Vec& u = eig.vectors[k];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out(i, j) += w * u[i] * u[j];
    }
    return out;
}

IsotropyReport isotropy_report(const std::vector<Vec>& points) {
    const Tolerances& tol = tolerances();
    for (const Vec& h : points)
        if (std::fabs(norm2(h) - 1.0) > tol.eps_unit)
            throw InvalidInput("isotropy_report: non-unit input vector");
    Mat m = second_moment(points);
    IsotropyReport rep;
    rep.lambda_min = min_eigenvalue(m);
    rep.measure = static_cast<double>(m.dim()) * rep.lambda_min;
    rep.c_level = rep.measure;
    return rep;
}

}  // namespace pointloc
