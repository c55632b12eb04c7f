#pragma once

#include <optional>
#include <vector>

#include "pointloc/rational.hpp"

namespace pointloc {

// One answered (or hypothesised) sign query: sign(<query, y>) = sign.
struct SignCondition {
    RatVec query;
    int sign = 0;  // -1, 0, +1
};

SignCondition make_condition(const Vec& q, int sign);

// Phase-1 simplex over {x >= 0 : A x = b}, exact rational arithmetic,
// Bland's rule. Columns are the columns of A.
//
// feasible: `witness` is a solution x.
// infeasible: `prices` is a Farkas vector y with y^T A_j <= 0 for every
// column and <y, b> > 0.
struct Phase1Result {
    bool feasible = false;
    RatVec witness;
    RatVec prices;
};

Phase1Result phase1_solve(const std::vector<RatVec>& columns, const RatVec& rhs);

// True iff some y satisfies every condition strictly/exactly as stated.
// Strict inequalities are homogenized to <q,y> >= 1 (valid: the solution
// set is a cone), equalities stay equalities.
bool cone_feasible(const std::vector<SignCondition>& conditions);

// Same decision plus a witness point inside the cell when feasible.
struct ConeWitness {
    bool feasible = false;
    RatVec point;
};
ConeWitness cone_feasible_witness(const std::vector<SignCondition>& conditions);

// Membership of h in rowspan(zeros) + cone(stricts).
// Not a member: `separator` is an exact point of the closed cell
// {y : <z,y> = 0 for z in zeros, <a,y> >= 0 for a in stricts}
// with <h, separator> < 0.
struct ConeMembership {
    bool member = false;
    RatVec certificate_lambda;  // unused placeholder when member
    RatVec separator;
};

ConeMembership dual_cone_member(const std::vector<RatVec>& zeros,
                                const std::vector<RatVec>& stricts,
                                const RatVec& h);

// Incremental exact row space; answers h in span(added vectors).
class SpanBasis {
  public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}
    void add(RatVec v);
    bool contains(const RatVec& h) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

  private:
    std::size_t dim_;
    std::vector<RatVec> rows_;           // echelon rows, pivot normalized to 1
    std::vector<std::size_t> pivot_col_;
};

}  // namespace pointloc
