#include "pointloc/cone2.hpp"

namespace pointloc {

namespace {

Rat cross(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

RatVec rot90(const RatVec& q) { return {Rat(-q[1]), Rat(q[0])}; }

RatVec neg(const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

}  // namespace

Cone2::Cone2(std::size_t dim) : d_(dim) {
    if (dim < 1 || dim > 2) throw InvalidInput("Cone2 supports d in {1,2}");
}

void Cone2::add(const RatVec& query, int sign) {
    if (query.size() != d_) throw DimensionMismatch("Cone2: condition dimension mismatch");
    if (is_zero_vec(query)) throw InvalidInput("Cone2: zero condition vector");
    if (kind_ == Kind::Empty) return;
    if (d_ == 1)
        add1(query, sign);
    else
        add2(query, sign);
}

void Cone2::add1(const RatVec& q, int sign) {
    int qs = sign_of(q[0]);
    switch (kind_) {
        case Kind::Full:
            if (sign == 0) kind_ = Kind::Zero;
            else { kind_ = Kind::Ray; r1_ = {Rat(qs * sign)}; }
            break;
        case Kind::Ray:
            if (sign == 0 || qs * sign_of(r1_[0]) != sign) kind_ = Kind::Empty;
            break;
        case Kind::Zero:
            if (sign != 0) kind_ = Kind::Empty;
            break;
        default:
            throw InvalidInput("Cone2: invalid d=1 state");
    }
}

void Cone2::add2(const RatVec& q_in, int sign) {
    if (sign == 0) {
        RatVec w = rot90(q_in);
        switch (kind_) {
            case Kind::Full:
                kind_ = Kind::Line;
                r1_ = w;
                return;
            case Kind::Halfplane: {
                int s = sign_dot(n_, w);
                if (s == 0) { kind_ = Kind::Empty; return; }
                kind_ = Kind::Ray;
                r1_ = s > 0 ? w : neg(w);
                return;
            }
            case Kind::Sector: {
                int s1 = sign_dot(q_in, r1_);
                int s2 = sign_dot(q_in, r2_);
                if (s1 * s2 < 0) {
                    // the line crosses the open sector; keep its inner ray
                    RatVec u = w;
                    if (!(sgn(cross(r1_, u)) > 0 && sgn(cross(u, r2_)) > 0)) u = neg(u);
                    kind_ = Kind::Ray;
                    r1_ = std::move(u);
                } else {
                    kind_ = Kind::Empty;
                }
                return;
            }
            case Kind::Line:
                if (sign_dot(q_in, r1_) != 0) kind_ = Kind::Zero;
                return;
            case Kind::Ray:
                if (sign_dot(q_in, r1_) != 0) kind_ = Kind::Empty;
                return;
            case Kind::Zero:
                return;
            case Kind::Empty:
                return;
        }
        return;
    }

    // Strict condition; reduce to <q,y> > 0.
    RatVec q = sign > 0 ? q_in : neg(q_in);
    switch (kind_) {
        case Kind::Full:
            kind_ = Kind::Halfplane;
            n_ = q;
            return;
        case Kind::Halfplane: {
            if (sgn(cross(n_, q)) == 0) {
                if (sign_dot(n_, q) < 0) kind_ = Kind::Empty;
                return;  // same halfplane otherwise
            }
            RatVec wn = rot90(n_);
            if (sign_dot(q, wn) < 0) wn = neg(wn);
            RatVec wq = rot90(q);
            if (sign_dot(n_, wq) < 0) wq = neg(wq);
            kind_ = Kind::Sector;
            if (sgn(cross(wn, wq)) > 0) { r1_ = std::move(wn); r2_ = std::move(wq); }
            else { r1_ = std::move(wq); r2_ = std::move(wn); }
            return;
        }
        case Kind::Sector: {
            int s1 = sign_dot(q, r1_);
            int s2 = sign_dot(q, r2_);
            if (s1 >= 0 && s2 >= 0) return;  // s1=s2=0 impossible: rays independent
            if (s1 <= 0 && s2 <= 0) { kind_ = Kind::Empty; return; }
            RatVec u = rot90(q);
            if (!(sgn(cross(r1_, u)) > 0 && sgn(cross(u, r2_)) > 0)) u = neg(u);
            if (s1 > 0) r2_ = std::move(u);
            else r1_ = std::move(u);
            return;
        }
        case Kind::Line: {
            int s = sign_dot(q, r1_);
            if (s == 0) { kind_ = Kind::Empty; return; }
            kind_ = Kind::Ray;
            if (s < 0) r1_ = neg(r1_);
            return;
        }
        case Kind::Ray:
            if (sign_dot(q, r1_) <= 0) kind_ = Kind::Empty;
            return;
        case Kind::Zero:
            kind_ = Kind::Empty;
            return;
        case Kind::Empty:
            return;
    }
}

RatVec Cone2::witness() const {
    switch (kind_) {
        case Kind::Empty:
            throw InvalidInput("Cone2::witness on empty set");
        case Kind::Zero:
            return RatVec(d_, Rat(0));
        case Kind::Full: {
            RatVec w(d_, Rat(0));
            w[0] = 1;
            return w;
        }
        case Kind::Halfplane:
            return n_;
        case Kind::Line:
        case Kind::Ray:
            return r1_;
        case Kind::Sector:
            return rat_combine(Rat(1), r1_, Rat(1), r2_);
    }
    throw InvalidInput("Cone2: unreachable");
}

int Cone2::infer(const RatVec& h) const {
    if (h.size() != d_) throw DimensionMismatch("Cone2::infer dimension mismatch");
    switch (kind_) {
        case Kind::Empty:
            throw InvalidInput("Cone2::infer on empty set");
        case Kind::Zero:
            return 0;
        case Kind::Full:
            return is_zero_vec(h) ? 0 : kUnknown;
        case Kind::Line:
            return sign_dot(h, r1_) == 0 ? 0 : kUnknown;
        case Kind::Ray:
            return sign_dot(h, r1_);
        case Kind::Halfplane: {
            if (sgn(cross(n_, h)) != 0) return kUnknown;
            return sign_dot(n_, h);  // h = lambda*n, sign of lambda
        }
        case Kind::Sector: {
            int s1 = sign_dot(h, r1_);
            int s2 = sign_dot(h, r2_);
            if (s1 == 0 && s2 == 0) return 0;
            if (s1 >= 0 && s2 >= 0) return 1;
            if (s1 <= 0 && s2 <= 0) return -1;
            return kUnknown;
        }
    }
    throw InvalidInput("Cone2: unreachable");
}

}  // namespace pointloc
