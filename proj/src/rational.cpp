#include "pointloc/rational.hpp"

#include <cmath>

namespace pointloc {

Rat rat_of(double x) {
    if (!std::isfinite(x)) throw InvalidInput("rat_of: non-finite value");
    return mpq_class(x);  // exact: doubles are binary rationals
}

RatVec rat_vec(const Vec& v) {
    RatVec out;
    out.reserve(v.size());
    for (double x : v) out.push_back(rat_of(x));
    return out;
}

Vec dbl_vec(const RatVec& v) {
    Vec out;
    out.reserve(v.size());
    for (const Rat& r : v) out.push_back(r.get_d());
    return out;
}

int sign_of(const Rat& r) { return sgn(r); }

Rat rat_dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("rat_dot dimension mismatch");
    Rat s = 0;
    Rat term;
    for (std::size_t i = 0; i < a.size(); ++i) {
        term = a[i] * b[i];
        s += term;
    }
    return s;
}

int sign_dot(const RatVec& a, const RatVec& b) { return sgn(rat_dot(a, b)); }

bool is_zero_vec(const RatVec& v) {
    for (const Rat& r : v)
        if (sgn(r) != 0) return false;
    return true;
}

RatVec rat_combine(const Rat& a, const RatVec& x, const Rat& b, const RatVec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("rat_combine dimension mismatch");
    RatVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
    return out;
}

std::pair<RatVec, int> canonical_direction(const RatVec& v) {
    std::size_t f = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) { f = i; break; }
    if (f == v.size()) throw InvalidInput("canonical_direction: zero vector");
    int s = sgn(v[f]);
    Rat scale = abs(v[f]);
    RatVec canon(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) canon[i] = v[i] / scale;
    return {canon, s};
}

bool RatVecLess::operator()(const RatVec& a, const RatVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace pointloc
