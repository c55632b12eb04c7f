#pragma once

#include "pointloc/feasibility.hpp"

namespace pointloc {

// Exact solution-set tracker for sign conditions in dimension 1 or 2.
// The solution set of any condition list is one of finitely many shapes;
// adding a condition is O(1) exact rational work. Generators are always
// rotations of input vectors, so coordinate sizes stay bounded.
class Cone2 {
  public:
    enum class Kind { Full, Halfplane, Sector, Line, Ray, Zero, Empty };

    explicit Cone2(std::size_t dim);

    std::size_t dim() const { return d_; }
    Kind kind() const { return kind_; }
    bool feasible() const { return kind_ != Kind::Empty; }

    void add(const RatVec& query, int sign);
    void add(const SignCondition& c) { add(c.query, c.sign); }

    // A point of the current solution set (Empty throws).
    RatVec witness() const;

    // Sign of <h, y> over the whole set: -1/0/+1 if constant, kUnknown else.
    int infer(const RatVec& h) const;

  private:
    void add1(const RatVec& q, int sign);
    void add2(const RatVec& q, int sign);

    std::size_t d_;
    Kind kind_ = Kind::Full;
    // Sector: open cone {a*r1 + b*r2 : a,b > 0} with cross(r1,r2) > 0.
    // Halfplane: {y : <n,y> > 0}. Ray: {t*r : t > 0}. Line: {t*r : t in R}.
    RatVec r1_, r2_, n_;
};

}  // namespace pointloc
