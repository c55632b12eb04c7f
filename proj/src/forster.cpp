#include "pointloc/forster.hpp"

#include <cmath>

namespace pointloc {

namespace {

std::vector<Vec> unit_images(const Mat& t, const std::vector<Vec>& units) {
    std::vector<Vec> out;
    out.reserve(units.size());
    for (const Vec& u : units) out.push_back(normalized(t.apply(u)));
    return out;
}

}  // namespace

ForsterCertificate forster_transform(const std::vector<Vec>& H, double target_c, int max_iters) {
    if (H.empty()) throw InvalidInput("forster_transform: empty input");
    const std::size_t d = H[0].size();
    if (target_c <= 0.0 || target_c >= 1.0 + 1e-12)
        throw InvalidInput("forster_transform: target_c must lie in (0,1]");
    if (H.size() < d) throw DimensionTooFew("forster_transform: fewer vectors than dimensions");

    std::vector<Vec> units;
    units.reserve(H.size());
    for (const Vec& h : H) {
        if (h.size() != d) throw DimensionMismatch("forster_transform: ragged dimensions");
        units.push_back(normalized(h));
    }

    Mat t = Mat::identity(d);
    double best_c = 0.0;
    for (int iter = 0; iter <= max_iters; ++iter) {
        std::vector<Vec> images = unit_images(t, units);
        Mat m = second_moment(images);
        double c = static_cast<double>(d) * min_eigenvalue(m);
        best_c = std::max(best_c, c);
        if (c >= target_c) {
            ForsterCertificate cert;
            cert.transform = t;
            cert.iterations = iter;
            cert.scales.reserve(H.size());
            for (const Vec& h : H) {
                double s = norm2(t.apply(h));
                if (!(s > 0.0) || !std::isfinite(s))
                    throw ConvergenceFailure(best_c, iter);
                cert.scales.push_back(1.0 / s);
            }
            // certificate soundness: recompute from the final rescaled set
            cert.achieved_c = isotropy_report(apply_certificate(cert, H)).c_level;
            return cert;
        }
        if (iter == max_iters) break;

        Mat scaled = m;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) scaled(i, j) *= static_cast<double>(d);
        Mat n;
        try {
            n = inv_sqrt(scaled);
        } catch (const NotPositiveDefinite&) {
            throw ConvergenceFailure(best_c, iter);
        }
        t = n.multiply(t);
        double det = t.det();
        if (!(std::fabs(det) > 0.0) || !std::isfinite(det))
            throw ConvergenceFailure(best_c, iter);
        double scale = std::pow(std::fabs(det), -1.0 / static_cast<double>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t(i, j) *= scale;
    }
    throw ConvergenceFailure(best_c, max_iters);
}

std::vector<Vec> apply_certificate(const ForsterCertificate& cert, const std::vector<Vec>& H) {
    if (cert.scales.size() != H.size())
        throw InvalidInput("apply_certificate: certificate/input size mismatch");
    std::vector<Vec> out;
    out.reserve(H.size());
    for (const Vec& h : H) out.push_back(normalized(cert.transform.apply(h)));
    return out;
}

std::vector<Vec> scaled_originals(const ForsterCertificate& cert, const std::vector<Vec>& H) {
    if (cert.scales.size() != H.size())
        throw InvalidInput("scaled_originals: certificate/input size mismatch");
    std::vector<Vec> out;
    out.reserve(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) {
        Vec v(H[i]);
        for (double& x : v) x *= cert.scales[i];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace pointloc
