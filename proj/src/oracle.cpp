#include "pointloc/oracle.hpp"

#include <cmath>
#include <cstdio>

namespace pointloc {

QueryKind GenComparisonQuery::kind() const {
    bool alpha_zero = sgn(exact_alpha) == 0;
    bool beta_zero = sgn(exact_beta) == 0;
    if ((j == kNone && beta_zero) || (i == kNone && alpha_zero)) return QueryKind::Label;
    static const Rat half(1, 2);
    if (exact_alpha == half && exact_beta == half) return QueryKind::Comparison;
    return QueryKind::Generalized;
}

void QueryTranscript::record(const GenComparisonQuery& q, int answer) {
    entries.push_back(TranscriptEntry{q, answer});
    switch (q.kind()) {
        case QueryKind::Label: ++labels; break;
        case QueryKind::Comparison: ++comparisons; break;
        case QueryKind::Generalized: ++generalized; break;
    }
}

std::string QueryTranscript::to_csv() const {
    std::string out = "kind,i,j,alpha,beta,answer\n";
    char buf[160];
    for (const TranscriptEntry& e : entries) {
        const char* kind = "generalized";
        if (e.query.kind() == QueryKind::Label) kind = "label";
        else if (e.query.kind() == QueryKind::Comparison) kind = "comparison";
        std::snprintf(buf, sizeof(buf), "%s,%d,%d,%.17g,%.17g,%d\n", kind, e.query.i,
                      e.query.j, e.query.alpha, e.query.beta, e.answer);
        out += buf;
    }
    return out;
}

QuerySpace::QuerySpace(std::vector<Vec> H) : h_(std::move(H)) {
    if (h_.empty()) throw InvalidInput("QuerySpace: empty hyperplane list");
    d_ = h_[0].size();
    exact_.reserve(h_.size());
    for (const Vec& h : h_) {
        if (h.size() != d_) throw DimensionMismatch("QuerySpace: ragged dimensions");
        RatVec r = rat_vec(h);
        if (is_zero_vec(r)) throw InvalidInput("QuerySpace: zero hyperplane");
        exact_.push_back(std::move(r));
    }
}

GenComparisonQuery QuerySpace::make_query(int i, int j, double a, double b) const {
    auto valid = [&](int idx) { return idx >= 0 && idx < static_cast<int>(h_.size()); };
    if (i != GenComparisonQuery::kNone && !valid(i))
        throw InvalidInput("make_query: index i out of range");
    if (j != GenComparisonQuery::kNone && !valid(j))
        throw InvalidInput("make_query: index j out of range");
    if (i == GenComparisonQuery::kNone && a != 0.0)
        throw InvalidInput("make_query: coefficient on absent i");
    if (j == GenComparisonQuery::kNone && b != 0.0)
        throw InvalidInput("make_query: coefficient on absent j");
    if (a == 0.0 && b == 0.0) throw InvalidInput("make_query: both coefficients zero");

    Rat ra = rat_of(a), rb = rat_of(b);
    Rat s = abs(ra) + abs(rb);
    GenComparisonQuery q;
    q.i = i;
    q.j = j;
    q.exact_alpha = ra / s;
    q.exact_beta = rb / s;
    q.alpha = q.exact_alpha.get_d();
    q.beta = q.exact_beta.get_d();

    q.exact_vector.assign(d_, Rat(0));
    if (i != GenComparisonQuery::kNone)
        for (std::size_t k = 0; k < d_; ++k) q.exact_vector[k] += q.exact_alpha * exact_[i][k];
    if (j != GenComparisonQuery::kNone)
        for (std::size_t k = 0; k < d_; ++k) q.exact_vector[k] -= q.exact_beta * exact_[j][k];
    if (is_zero_vec(q.exact_vector))
        throw InvalidInput("make_query: zero query vector (parallel hyperplanes, matching coefficients)");

    q.vector.assign(d_, 0.0);
    if (i != GenComparisonQuery::kNone)
        for (std::size_t k = 0; k < d_; ++k) q.vector[k] += q.alpha * h_[i][k];
    if (j != GenComparisonQuery::kNone)
        for (std::size_t k = 0; k < d_; ++k) q.vector[k] -= q.beta * h_[j][k];
    return q;
}

int ask(SignOracle& oracle, const GenComparisonQuery& q, QueryTranscript& transcript) {
    int answer = oracle.answer(q.exact_vector);
    transcript.record(q, answer);
    return answer;
}

RatVec SortItem::exact_vector(const QuerySpace& qs) const {
    Rat f = rat_of(scale) * sig;
    const RatVec& h = qs.exact(static_cast<std::size_t>(index));
    RatVec out(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) out[k] = f * h[k];
    return out;
}

MergeSorter::MergeSorter(std::vector<SortItem> items) {
    for (const SortItem& it : items) {
        if (it.sig != 1 && it.sig != -1) throw InvalidInput("MergeSorter: sig must be +-1");
        if (!(it.scale > 0.0) || !std::isfinite(it.scale))
            throw InvalidInput("MergeSorter: scale must be positive finite");
        runs_.push_back(SortedGroups{{it}});
    }
    advance();
}

bool MergeSorter::done() const { return !merging_ && runs_.size() <= 1; }

std::pair<SortItem, SortItem> MergeSorter::next_comparison() const {
    if (!merging_) throw InvalidInput("MergeSorter: no pending comparison");
    return {left_[li_][0], right_[ri_][0]};
}

void MergeSorter::apply(int answer) {
    if (!merging_) throw InvalidInput("MergeSorter: apply without pending comparison");
    ++comparisons_;
    if (answer < 0) {
        merged_.push_back(std::move(left_[li_++]));
    } else if (answer > 0) {
        merged_.push_back(std::move(right_[ri_++]));
    } else {
        std::vector<SortItem> g = std::move(left_[li_++]);
        auto& rg = right_[ri_++];
        g.insert(g.end(), rg.begin(), rg.end());
        merged_.push_back(std::move(g));
    }
    advance();
}

void MergeSorter::advance() {
    for (;;) {
        if (merging_) {
            if (li_ < left_.size() && ri_ < right_.size()) return;  // needs a query
            while (li_ < left_.size()) merged_.push_back(std::move(left_[li_++]));
            while (ri_ < right_.size()) merged_.push_back(std::move(right_[ri_++]));
            runs_.push_back(std::move(merged_));
            merged_.clear();
            merging_ = false;
        }
        if (runs_.size() <= 1) return;
        left_ = std::move(runs_[0]);
        right_ = std::move(runs_[1]);
        runs_.erase(runs_.begin(), runs_.begin() + 2);
        li_ = ri_ = 0;
        merged_.clear();
        merging_ = true;
    }
}

const SortedGroups& MergeSorter::result() const {
    if (!done()) throw InvalidInput("MergeSorter: result before completion");
    static const SortedGroups empty;
    return runs_.empty() ? empty : runs_[0];
}

SortedGroups sort_by_inner_product(SignOracle& oracle, const std::vector<SortItem>& items,
                                   const QuerySpace& qs, QueryTranscript& transcript) {
    for (const SortItem& it : items)
        if (it.index < 0 || it.index >= static_cast<int>(qs.size()))
            throw InvalidInput("sort_by_inner_product: item index out of range");
    MergeSorter sorter(items);
    while (!sorter.done()) {
        auto [a, b] = sorter.next_comparison();
        GenComparisonQuery q =
            qs.make_query(a.index, b.index, a.sig * a.scale, b.sig * b.scale);
        sorter.apply(ask(oracle, q, transcript));
    }
    return sorter.result();
}

}  // namespace pointloc
