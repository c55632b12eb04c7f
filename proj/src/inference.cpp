#include "pointloc/inference.hpp"

#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pointloc {

InferenceContext::InferenceContext(std::vector<SignCondition> conditions, std::size_t dim)
    : d_(dim), conditions_(std::move(conditions)), span_(dim) {
    for (const SignCondition& c : conditions_) {
        if (c.query.size() != d_)
            throw DimensionMismatch("InferenceContext: condition dimension mismatch");
        if (c.sign == 0) {
            zeros_.push_back(c.query);
            span_.add(c.query);
        } else if (c.sign == 1) {
            stricts_.push_back(c.query);
        } else if (c.sign == -1) {
            RatVec neg(d_);
            for (std::size_t j = 0; j < d_; ++j) neg[j] = -c.query[j];
            stricts_.push_back(std::move(neg));
        } else {
            throw InvalidInput("InferenceContext: bad sign");
        }
    }
    if (d_ <= 2) {
        cone_.emplace(d_);
        for (const SignCondition& c : conditions_) cone_->add(c);
        known_empty_ = !cone_->feasible();
    }
}

int InferenceContext::infer(const RatVec& h, Pool& pool) const {
    if (h.size() != d_) throw DimensionMismatch("infer: dimension mismatch");
    if (cone_) {
        if (known_empty_) throw InconsistentOracle("inference over an empty cell");
        return cone_->infer(h);
    }

    bool seen_pos = false, seen_neg = false;
    for (const RatVec& y : pool) {
        int s = sign_dot(h, y);
        if (s > 0) seen_pos = true;
        else if (s < 0) seen_neg = true;
        if (seen_pos && seen_neg) return kUnknown;
    }

    if (seen_pos) {
        ConeMembership m = dual_cone_member(zeros_, stricts_, h);
        if (m.member) return kPlus;
        pool.push_back(std::move(m.separator));
        return kUnknown;
    }
    if (seen_neg) {
        RatVec neg(d_);
        for (std::size_t j = 0; j < d_; ++j) neg[j] = -h[j];
        ConeMembership m = dual_cone_member(zeros_, stricts_, neg);
        if (m.member) return kMinus;
        // separator y has <-h,y> < 0, i.e. <h,y> > 0: still a valid pool point
        pool.push_back(std::move(m.separator));
        return kUnknown;
    }

    if (span_.contains(h)) return kZero;

    ConeMembership mp = dual_cone_member(zeros_, stricts_, h);
    if (mp.member) return kPlus;
    pool.push_back(std::move(mp.separator));

    RatVec neg(d_);
    for (std::size_t j = 0; j < d_; ++j) neg[j] = -h[j];
    ConeMembership mn = dual_cone_member(zeros_, stricts_, neg);
    if (mn.member) return kMinus;
    pool.push_back(std::move(mn.separator));
    return kUnknown;
}

SignVector infer_many(const InferenceContext& ctx, const std::vector<RatVec>& hs) {
    SignVector out(hs.size(), kUnknown);
#ifdef _OPENMP
#pragma omp parallel
    {
        InferenceContext::Pool pool;
#pragma omp for schedule(dynamic, 8)
        for (long i = 0; i < static_cast<long>(hs.size()); ++i)
            out[static_cast<std::size_t>(i)] = ctx.infer(hs[static_cast<std::size_t>(i)], pool);
    }
#else
    InferenceContext::Pool pool;
    for (std::size_t i = 0; i < hs.size(); ++i) out[i] = ctx.infer(hs[i], pool);
#endif
    return out;
}

SignVector infer_many_reference(const std::vector<SignCondition>& conditions,
                                const std::vector<RatVec>& hs) {
    SignVector out(hs.size(), kUnknown);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        int found = kUnknown;
        int count = 0;
        for (int s : {-1, 0, 1}) {
            std::vector<SignCondition> ext(conditions);
            ext.push_back(SignCondition{hs[i], s});
            if (cone_feasible(ext)) {
                found = s;
                ++count;
            }
        }
        out[i] = (count == 1) ? found : kUnknown;
    }
    return out;
}

int infer(const std::vector<SignCondition>& conditions, const RatVec& h) {
    if (!cone_feasible(conditions)) throw InvalidInput("infer: infeasible condition set");
    std::size_t d = h.size();
    InferenceContext ctx(conditions, d);
    InferenceContext::Pool pool;
    return ctx.infer(h, pool);
}

namespace {

struct QueryGroups {
    std::vector<RatVec> reps;
    std::vector<std::size_t> group_of;  // per original query
    std::vector<int> rel_sign;          // query = positive multiple of rep iff +1
};

QueryGroups group_parallel(const std::vector<RatVec>& queries) {
    QueryGroups g;
    std::map<RatVec, std::pair<std::size_t, int>, RatVecLess> seen;
    for (const RatVec& q : queries) {
        if (is_zero_vec(q)) throw InvalidInput("enumerate_patterns: zero query");
        auto [canon, s] = canonical_direction(q);
        auto it = seen.find(canon);
        if (it == seen.end()) {
            seen.emplace(std::move(canon), std::make_pair(g.reps.size(), s));
            g.group_of.push_back(g.reps.size());
            g.rel_sign.push_back(1);
            g.reps.push_back(q);
        } else {
            g.group_of.push_back(it->second.first);
            g.rel_sign.push_back(s == it->second.second ? 1 : -1);
        }
    }
    return g;
}

}  // namespace

std::vector<SignVector> enumerate_patterns(const std::vector<RatVec>& queries,
                                           std::size_t dim, std::size_t limit) {
    for (const RatVec& q : queries)
        if (q.size() != dim) throw DimensionMismatch("enumerate_patterns: dimension mismatch");
    if (queries.empty()) return {SignVector{}};

    QueryGroups groups = group_parallel(queries);
    const std::size_t ng = groups.reps.size();
    std::size_t nodes = 1;

    std::vector<SignVector> group_patterns;
    if (dim <= 2) {
        struct Cell { Cone2 cone; SignVector pat; };
        std::vector<Cell> cells{{Cone2(dim), {}}};
        for (std::size_t gi = 0; gi < ng; ++gi) {
            const RatVec& q = groups.reps[gi];
            std::vector<Cell> next;
            next.reserve(cells.size() + 8);
            for (Cell& cell : cells) {
                int s = cell.cone.infer(q);
                if (s != kUnknown) {
                    // constant over the cell: the condition would not shrink it
                    cell.pat.push_back(s);
                    next.push_back(std::move(cell));
                } else {
                    for (int sigma : {-1, 0, 1}) {
                        Cell child{cell.cone, cell.pat};
                        child.cone.add(q, sigma);
                        if (!child.cone.feasible())
                            throw InvalidInput("enumerate_patterns: internal split invariant");
                        child.pat.push_back(sigma);
                        next.push_back(std::move(child));
                    }
                    nodes += 2;
                }
                if (nodes > limit) throw NodeLimitExceeded("enumerate_patterns: node limit");
            }
            cells = std::move(next);
        }
        group_patterns.reserve(cells.size());
        for (Cell& c : cells) group_patterns.push_back(std::move(c.pat));
    } else {
        struct Cell {
            std::vector<SignCondition> conds;
            RatVec witness;
            SignVector pat;
        };
        std::vector<Cell> cells{{{}, RatVec(dim, Rat(0)), {}}};
        for (std::size_t gi = 0; gi < ng; ++gi) {
            const RatVec& q = groups.reps[gi];
            std::vector<Cell> next;
            for (Cell& cell : cells) {
                int s0 = sign_dot(q, cell.witness);
                for (int sigma : {-1, 0, 1}) {
                    if (sigma == s0) {
                        Cell child{cell.conds, cell.witness, cell.pat};
                        child.conds.push_back(SignCondition{q, sigma});
                        child.pat.push_back(sigma);
                        next.push_back(std::move(child));
                    } else {
                        std::vector<SignCondition> ext(cell.conds);
                        ext.push_back(SignCondition{q, sigma});
                        ConeWitness w = cone_feasible_witness(ext);
                        if (!w.feasible) continue;
                        Cell child{std::move(ext), std::move(w.point), cell.pat};
                        child.pat.push_back(sigma);
                        next.push_back(std::move(child));
                        ++nodes;
                    }
                    if (nodes > limit) throw NodeLimitExceeded("enumerate_patterns: node limit");
                }
            }
            cells = std::move(next);
        }
        group_patterns.reserve(cells.size());
        for (Cell& c : cells) group_patterns.push_back(std::move(c.pat));
    }

    std::vector<SignVector> out;
    out.reserve(group_patterns.size());
    for (const SignVector& gp : group_patterns) {
        SignVector pat(queries.size());
        for (std::size_t i = 0; i < queries.size(); ++i)
            pat[i] = groups.rel_sign[i] * gp[groups.group_of[i]];
        out.push_back(std::move(pat));
    }
    return out;
}

std::vector<SignVector> enumerate_patterns(const std::vector<Vec>& queries,
                                           std::size_t dim, std::size_t limit) {
    std::vector<RatVec> rq;
    rq.reserve(queries.size());
    for (const Vec& q : queries) rq.push_back(rat_vec(q));
    return enumerate_patterns(rq, dim, limit);
}

}  // namespace pointloc
