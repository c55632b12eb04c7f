#include "pointloc/feasibility.hpp"

#include <algorithm>

namespace pointloc {

SignCondition make_condition(const Vec& q, int sign) {
    SignCondition c;
    c.query = rat_vec(q);
    c.sign = sign;
    if (is_zero_vec(c.query)) throw InvalidInput("condition with zero query vector");
    return c;
}

Phase1Result phase1_solve(const std::vector<RatVec>& columns, const RatVec& rhs) {
    const std::size_t m = rhs.size();
    const std::size_t n = columns.size();
    for (const RatVec& col : columns)
        if (col.size() != m) throw DimensionMismatch("phase1: column length mismatch");

    // Row-flip so the right-hand side is nonnegative; artificial basis starts
    // feasible. Flips are undone on the price vector at the end.
    std::vector<bool> flipped(m, false);
    // tab[i]: n real columns, m artificial columns, rhs. Artificial columns
    // are kept (never entering) so prices can be read off the cost row.
    std::vector<RatVec> tab(m, RatVec(n + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        flipped[i] = sgn(rhs[i]) < 0;
        Rat f = flipped[i] ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = f * columns[j][i];
        tab[i][n + i] = 1;
        tab[i][n + m] = f * rhs[i];
    }

    // Reduced costs for minimizing the artificial sum: z_j = sum_i tab[i][j] - c_j.
    RatVec z(n + m + 1);
    for (std::size_t j = 0; j <= n + m; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += tab[i][j];
        z[j] = s;
    }
    for (std::size_t i = 0; i < m; ++i) z[n + i] -= 1;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: smallest-index real column with positive reduced cost.
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(z[j]) > 0) { enter = j; break; }
        if (enter == n) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][enter]) <= 0) continue;
            if (leave == m) { leave = i; continue; }
            Rat cur = tab[i][n + m] * tab[leave][enter];
            Rat best = tab[leave][n + m] * tab[i][enter];
            int c = cmp(cur, best);
            if (c < 0 || (c == 0 && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m)
            throw InvalidInput("phase1: unbounded artificial objective (internal error)");

        Rat piv = tab[leave][enter];
        for (std::size_t j = 0; j <= n + m; ++j) tab[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(tab[i][enter]) == 0) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= n + m; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (sgn(z[enter]) != 0) {
            Rat f = z[enter];
            for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    Phase1Result res;
    if (sgn(z[n + m]) == 0) {
        res.feasible = true;
        res.witness.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.witness[basis[i]] = tab[i][n + m];
    } else {
        res.feasible = false;
        // Prices y_i = z[n+i] + c_art = z[n+i] + 1, unflipped.
        res.prices.assign(m, Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            Rat y = z[n + i] + 1;
            res.prices[i] = flipped[i] ? Rat(-y) : y;
        }
    }
    return res;
}

namespace {

// Shared builder: variables [y+ (d), y- (d), one slack per strict row].
Phase1Result solve_conditions(const std::vector<SignCondition>& conditions, std::size_t d) {
    std::size_t n_strict = 0;
    for (const SignCondition& c : conditions)
        if (c.sign != 0) ++n_strict;
    const std::size_t m = conditions.size();
    const std::size_t n = 2 * d + n_strict;

    std::vector<RatVec> cols(n, RatVec(m, Rat(0)));
    RatVec rhs(m);
    std::size_t slack = 0;
    for (std::size_t r = 0; r < m; ++r) {
        const SignCondition& c = conditions[r];
        Rat f = c.sign == -1 ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < d; ++j) {
            cols[j][r] = f * c.query[j];
            cols[d + j][r] = -f * c.query[j];
        }
        if (c.sign == 0) {
            rhs[r] = 0;
        } else {
            cols[2 * d + slack][r] = -1;
            ++slack;
            rhs[r] = 1;
        }
    }
    return phase1_solve(cols, rhs);
}

}  // namespace

ConeWitness cone_feasible_witness(const std::vector<SignCondition>& conditions) {
    ConeWitness out;
    if (conditions.empty()) {
        out.feasible = true;
        return out;  // empty condition set: whole space, witness 0
    }
    const std::size_t d = conditions[0].query.size();
    for (const SignCondition& c : conditions) {
        if (c.query.size() != d) throw DimensionMismatch("cone_feasible: ragged conditions");
        if (c.sign < -1 || c.sign > 1) throw InvalidInput("cone_feasible: bad sign");
    }
    Phase1Result r = solve_conditions(conditions, d);
    out.feasible = r.feasible;
    if (r.feasible) {
        out.point.assign(d, Rat(0));
        for (std::size_t j = 0; j < d; ++j) out.point[j] = r.witness[j] - r.witness[d + j];
    }
    return out;
}

bool cone_feasible(const std::vector<SignCondition>& conditions) {
    return cone_feasible_witness(conditions).feasible;
}

ConeMembership dual_cone_member(const std::vector<RatVec>& zeros,
                                const std::vector<RatVec>& stricts,
                                const RatVec& h) {
    const std::size_t d = h.size();
    std::vector<RatVec> cols;
    cols.reserve(2 * zeros.size() + stricts.size());
    for (const RatVec& z : zeros) {
        cols.push_back(z);
        RatVec neg(d);
        for (std::size_t j = 0; j < d; ++j) neg[j] = -z[j];
        cols.push_back(std::move(neg));
    }
    for (const RatVec& a : stricts) cols.push_back(a);

    Phase1Result r = phase1_solve(cols, h);
    ConeMembership out;
    if (r.feasible) {
        out.member = true;
        return out;
    }
    out.member = false;
    // prices y: <y, col> <= 0 for every column and <y,h> > 0. Negating gives a
    // point of the closed cell separating h.
    out.separator.assign(d, Rat(0));
    for (std::size_t j = 0; j < d; ++j) out.separator[j] = -r.prices[j];
    return out;
}

void SpanBasis::add(RatVec v) {
    if (v.size() != dim_) throw DimensionMismatch("SpanBasis: dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivot_col_[r]];
        if (sgn(c) != 0) {
            Rat f = c;
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
        }
    }
    for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(v[j]) != 0) {
            Rat f = v[j];
            for (std::size_t k = 0; k < dim_; ++k) v[k] /= f;
            rows_.push_back(std::move(v));
            pivot_col_.push_back(j);
            return;
        }
    }
    // dependent: nothing to add
}

bool SpanBasis::contains(const RatVec& h) const {
    if (h.size() != dim_) throw DimensionMismatch("SpanBasis: dimension mismatch");
    RatVec v(h);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivot_col_[r]];
        if (sgn(c) != 0) {
            Rat f = c;
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
        }
    }
    return is_zero_vec(v);
}

}  // namespace pointloc
