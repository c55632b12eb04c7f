#include "pointloc/locate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace pointloc {

std::size_t LocateConfig::k_sample(std::size_t d) const {
    if (k_override > 0) return static_cast<std::size_t>(k_override);
    double v = c_k * static_cast<double>(d) * static_cast<double>(d) *
               std::log(static_cast<double>(d) + 2.0);
    return static_cast<std::size_t>(std::ceil(v));
}

std::size_t LocateConfig::universal_s(std::size_t d) const {
    if (s_override > 0) return static_cast<std::size_t>(s_override);
    double v = c_s * std::pow(static_cast<double>(d), 3.0) *
               std::log(static_cast<double>(d) + 2.0);
    return static_cast<std::size_t>(std::ceil(v));
}

std::size_t LocateConfig::universal_t(std::size_t d) const {
    if (t_override > 0) return static_cast<std::size_t>(t_override);
    double v = c_t * static_cast<double>(d) * static_cast<double>(d) *
               std::log(static_cast<double>(d) + 2.0);
    return static_cast<std::size_t>(std::ceil(v));
}

void LocateConfig::validate(std::size_t d) const {
    if (k_sample(d) < d + 1) throw InvalidInput("LocateConfig: k_sample < d + 1");
    if (universal_t(d) > universal_s(d))
        throw InvalidInput("LocateConfig: universal_t > universal_s");
    if (min_progress < 1) throw InvalidInput("LocateConfig: min_progress < 1");
    if (!(target_c > 0.0) || target_c > 1.0)
        throw InvalidInput("LocateConfig: target_c out of (0,1]");
}

DirectionDedup dedup_directions(const std::vector<RatVec>& vectors) {
    DirectionDedup out;
    std::map<RatVec, std::pair<std::size_t, int>, RatVecLess> seen;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        auto [canon, s] = canonical_direction(vectors[i]);
        auto it = seen.find(canon);
        if (it == seen.end()) {
            seen.emplace(std::move(canon), std::make_pair(out.rep_position.size(), s));
            out.group_of.push_back(out.rep_position.size());
            out.sign_vs_rep.push_back(1);
            out.rep_position.push_back(i);
        } else {
            out.group_of.push_back(it->second.first);
            out.sign_vs_rep.push_back(s == it->second.second ? 1 : -1);
        }
    }
    return out;
}

std::vector<SignCondition> conditions_from_round(const SortedGroups& groups,
                                                 const std::vector<int>& rep_labels,
                                                 const QuerySpace& qs) {
    std::vector<SignCondition> conds;
    if (groups.empty()) return conds;

    std::vector<int> group_sign(groups.size());
    std::vector<RatVec> group_rep(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        int s = kUnknown;
        for (const SortItem& it : groups[g]) {
            int label = rep_labels[static_cast<std::size_t>(it.index)];
            if (label == kUnknown)
                throw InvalidInput("conditions_from_round: unlabeled item in sort");
            int key_sign = it.sig * label;
            if (s == kUnknown) s = key_sign;
            else if (s != key_sign)
                throw InconsistentOracle("tie group mixes different key signs");
        }
        group_sign[g] = s;
        group_rep[g] = groups[g][0].exact_vector(qs);
    }

    // key signs must be nondecreasing and the zero level is one tie group
    for (std::size_t g = 1; g < groups.size(); ++g) {
        if (group_sign[g] < group_sign[g - 1])
            throw InconsistentOracle("sorted key signs are not monotone");
        if (group_sign[g] == 0 && group_sign[g - 1] == 0)
            throw InconsistentOracle("two distinct tie groups at the zero level");
    }

    // adjacent-difference chain
    for (std::size_t g = 1; g < groups.size(); ++g) {
        RatVec diff(group_rep[g]);
        const RatVec& prev = group_rep[g - 1];
        for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= prev[k];
        if (is_zero_vec(diff))
            throw InconsistentOracle("distinct tie groups with identical vectors");
        conds.push_back(SignCondition{std::move(diff), 1});
    }
    // in-group equalities
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t j = 1; j < groups[g].size(); ++j) {
            RatVec diff = groups[g][j].exact_vector(qs);
            const RatVec& base = group_rep[g];
            for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= base[k];
            if (is_zero_vec(diff)) continue;  // identical items carry no information
            conds.push_back(SignCondition{std::move(diff), 0});
        }
    }
    // boundary labels: the remaining group labels are implied by the chain
    std::size_t last_neg = groups.size(), zero_g = groups.size(), first_pos = groups.size();
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (group_sign[g] < 0) last_neg = g;
        if (group_sign[g] == 0) zero_g = g;
        if (group_sign[g] > 0 && first_pos == groups.size()) first_pos = g;
    }
    if (last_neg != groups.size())
        conds.push_back(SignCondition{group_rep[last_neg], -1});
    if (zero_g != groups.size())
        conds.push_back(SignCondition{group_rep[zero_g], 0});
    if (first_pos != groups.size())
        conds.push_back(SignCondition{group_rep[first_pos], 1});
    return conds;
}

LocateResult locate_randomized(const std::vector<Vec>& H, SignOracle& oracle,
                               const LocateConfig& cfg) {
    QuerySpace qs(H);
    const std::size_t d = qs.dim();
    cfg.validate(d);

    std::vector<RatVec> exact;
    exact.reserve(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) exact.push_back(qs.exact(i));
    DirectionDedup dedup = dedup_directions(exact);
    const std::size_t nrep = dedup.rep_position.size();

    LocateResult res;
    res.log.original_size = H.size();
    res.log.representatives = nrep;

    std::vector<int> rep_sign(nrep, kUnknown);
    std::vector<std::size_t> active(nrep);
    for (std::size_t g = 0; g < nrep; ++g) active[g] = g;

    std::mt19937_64 rng(cfg.seed);
    const std::size_t k = cfg.k_sample(d);

    auto label_group = [&](std::size_t slot) {
        int pos = static_cast<int>(dedup.rep_position[slot]);
        GenComparisonQuery q = qs.make_query(pos, GenComparisonQuery::kNone, 1.0, 0.0);
        rep_sign[slot] = ask(oracle, q, res.transcript);
    };

    while (active.size() >= k) {
        RoundRecord rec;
        rec.active_before = active.size();
        std::size_t queries_before = res.transcript.total();

        std::vector<Vec> hv;
        hv.reserve(active.size());
        for (std::size_t slot : active) hv.push_back(H[dedup.rep_position[slot]]);

        std::vector<double> scales(active.size(), 1.0);
        try {
            ForsterCertificate cert =
                forster_transform(hv, cfg.target_c, cfg.forster_max_iters);
            scales = cert.scales;
            rec.achieved_c = cert.achieved_c;
        } catch (const ConvergenceFailure& e) {
            rec.forster_failed = true;
            rec.achieved_c = e.best_achieved_c;
        }

        std::vector<std::size_t> pick_pos(active.size());
        for (std::size_t i = 0; i < active.size(); ++i) pick_pos[i] = i;
        std::vector<std::size_t> picks;
        std::sample(pick_pos.begin(), pick_pos.end(), std::back_inserter(picks), k, rng);
        rec.sampled = picks.size();

        std::vector<int> labels(qs.size(), kUnknown);
        std::vector<SortItem> items;
        items.reserve(2 * picks.size());
        std::vector<bool> picked(active.size(), false);
        for (std::size_t p : picks) {
            picked[p] = true;
            std::size_t slot = active[p];
            label_group(slot);
            int pos = static_cast<int>(dedup.rep_position[slot]);
            labels[static_cast<std::size_t>(pos)] = rep_sign[slot];
            items.push_back(SortItem{pos, 1, scales[p]});
            items.push_back(SortItem{pos, -1, scales[p]});
        }

        SortedGroups groups = sort_by_inner_product(oracle, items, qs, res.transcript);
        std::vector<SignCondition> conds = conditions_from_round(groups, labels, qs);
        InferenceContext ctx(std::move(conds), d);
        if (ctx.cell_known_empty())
            throw InconsistentOracle("round conditions are infeasible");

        std::vector<std::size_t> targets;
        std::vector<RatVec> hs;
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (picked[i]) continue;
            targets.push_back(active[i]);
            hs.push_back(qs.exact(dedup.rep_position[active[i]]));
        }
        SignVector inferred = infer_many(ctx, hs);
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (inferred[t] != kUnknown) {
                rep_sign[targets[t]] = inferred[t];
                ++rec.inferred;
            }
        }

        std::vector<std::size_t> next_active;
        for (std::size_t slot : active)
            if (rep_sign[slot] == kUnknown) next_active.push_back(slot);

        if (rec.inferred < static_cast<std::size_t>(cfg.min_progress) &&
            !next_active.empty()) {
            rec.fallback = true;
            std::size_t batch = std::min(k, next_active.size());
            for (std::size_t b = 0; b < batch; ++b) label_group(next_active[b]);
            std::vector<std::size_t> rest;
            for (std::size_t slot : next_active)
                if (rep_sign[slot] == kUnknown) rest.push_back(slot);
            next_active = std::move(rest);
        }

        rec.queries = res.transcript.total() - queries_before;
        res.log.rounds.push_back(rec);
        active = std::move(next_active);
    }

    for (std::size_t slot : active) label_group(slot);
    res.log.final_labels = active.size();

    res.signs.resize(H.size());
    for (std::size_t i = 0; i < H.size(); ++i)
        res.signs[i] = dedup.sign_vs_rep[i] * rep_sign[dedup.group_of[i]];
    return res;
}

SignVector bruteforce_locate(const std::vector<Vec>& H, const Vec& x) {
    RatVec xr = rat_vec(x);
    SignVector out(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) {
        if (H[i].size() != x.size())
            throw DimensionMismatch("bruteforce_locate: dimension mismatch");
        out[i] = sign_dot(rat_vec(H[i]), xr);
    }
    return out;
}

}  // namespace pointloc
