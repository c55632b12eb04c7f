#pragma once

#include <gmpxx.h>

#include <vector>

#include "pointloc/common.hpp"
#include "pointloc/linalg.hpp"

namespace pointloc {

// All sign decisions run over exact rationals. Doubles are binary rationals,
// so rationalizing them is lossless; every sign computed downstream is exact
// for the rationalized inputs.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat rat_of(double x);              // exact; rejects non-finite input
RatVec rat_vec(const Vec& v);      // exact per-coordinate
Vec dbl_vec(const RatVec& v);      // nearest-double projection

int sign_of(const Rat& r);
Rat rat_dot(const RatVec& a, const RatVec& b);
int sign_dot(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& v);

// a*x + b*y, exact.
RatVec rat_combine(const Rat& a, const RatVec& x, const Rat& b, const RatVec& y);

// Canonical form for direction equivalence: v scaled so its first nonzero
// coordinate has absolute value 1. Returns (canonical vector, sign of that
// coordinate). Two vectors are positive multiples iff canon and sign match;
// antipodal iff canon matches and signs differ.
std::pair<RatVec, int> canonical_direction(const RatVec& v);

struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const;
};

}  // namespace pointloc
