#pragma once

#include <optional>

#include "pointloc/cone2.hpp"
#include "pointloc/feasibility.hpp"

namespace pointloc {

// Prepared decision machinery for one fixed condition set (one cell).
// Construction is cheap; infer() calls are independent and the context is
// immutable afterwards, so sweeps over many hyperplanes can run in parallel.
//
// The sign of h over the cell is decided through the polar route: with
// Z = {0-condition vectors} and A = {strict condition vectors oriented
// positive}, and a nonempty cell C,
//   inferred 0   iff  h in span(Z),
//   inferred +1  iff  h in span(Z) + cone(A) and not in span(Z),
//   inferred -1  symmetric with -h.
// A failed membership yields an exact point of the closed cell whose sign
// against h refutes the inference; such points are pooled and reused to
// dismiss other hyperplanes without further solves.
class InferenceContext {
  public:
    explicit InferenceContext(std::vector<SignCondition> conditions, std::size_t dim);

    std::size_t dim() const { return d_; }
    const std::vector<SignCondition>& conditions() const { return conditions_; }
    bool cell_known_empty() const { return known_empty_; }

    using Pool = std::vector<RatVec>;

    // Sign of <h,.> over the cell, or kUnknown. The pool collects closed-cell
    // points across calls; pass the same pool for a sweep on one thread.
    int infer(const RatVec& h, Pool& pool) const;

  private:
    std::size_t d_;
    std::vector<SignCondition> conditions_;
    std::vector<RatVec> zeros_, stricts_;
    SpanBasis span_;
    std::optional<Cone2> cone_;
    bool known_empty_ = false;
};

// Production sweep: OpenMP over hs with thread-local pools. Output entries
// are in {-1, 0, +1, kUnknown}.
SignVector infer_many(const InferenceContext& ctx, const std::vector<RatVec>& hs);

// Reference implementation of the same sweep: per hyperplane, up to three
// feasibility solves over the raw conditions. Slow; kept for tests and the
// kernel benchmark.
SignVector infer_many_reference(const std::vector<SignCondition>& conditions,
                                const std::vector<RatVec>& hs);

// Single-hyperplane inference with an explicit feasibility precheck.
// Throws InvalidInput when the condition set is infeasible.
int infer(const std::vector<SignCondition>& conditions, const RatVec& h);

// All sign vectors in {-1,0,+1}^|Q| realized by some y, by incremental cell
// splitting: d <= 2 uses the exact planar tracker, higher dimensions carry a
// rational witness per cell and solve for the alternative branches.
// Throws NodeLimitExceeded when more than `limit` cells would be created.
std::vector<SignVector> enumerate_patterns(const std::vector<RatVec>& queries,
                                           std::size_t dim, std::size_t limit);

std::vector<SignVector> enumerate_patterns(const std::vector<Vec>& queries,
                                           std::size_t dim, std::size_t limit);

}  // namespace pointloc
