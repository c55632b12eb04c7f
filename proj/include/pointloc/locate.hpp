#pragma once

#include <cstdint>
#include <random>

#include "pointloc/forster.hpp"
#include "pointloc/inference.hpp"
#include "pointloc/oracle.hpp"

namespace pointloc {

struct LocateConfig {
    double c_k = 8.0;       // k_sample = ceil(c_k * d^2 * ln(d+2))
    int k_override = 0;     // > 0 replaces the formula
    double target_c = 0.99;
    int forster_max_iters = 10000;
    int min_progress = 1;
    std::uint64_t seed = 12345;
    double c_s = 4.0;       // universal_s = ceil(c_s * d^3 * ln(d+2))
    double c_t = 2.0;       // universal_t = ceil(c_t * d^2 * ln(d+2))
    int s_override = 0;
    int t_override = 0;
    int universal_max_candidates = 50;
    std::size_t node_limit = 200000;        // enumeration guard
    std::size_t tree_node_limit = 1000000;  // build_tree guard
    int heuristic_samples = 200;            // sampled-x validation fallback

    std::size_t k_sample(std::size_t d) const;
    std::size_t universal_s(std::size_t d) const;
    std::size_t universal_t(std::size_t d) const;
    void validate(std::size_t d) const;  // k >= d+1, universal_t <= universal_s
};

struct RoundRecord {
    std::size_t active_before = 0;
    double achieved_c = -1.0;  // best achieved when Forster failed
    bool forster_failed = false;
    std::size_t sampled = 0;
    std::size_t inferred = 0;  // beyond the sampled labels
    std::size_t queries = 0;
    bool fallback = false;
};

struct ProgressLog {
    std::vector<RoundRecord> rounds;
    std::size_t final_labels = 0;
    std::size_t representatives = 0;  // after direction dedup
    std::size_t original_size = 0;
};

struct LocateResult {
    SignVector signs;  // over the original H, entry-exact
    QueryTranscript transcript;
    ProgressLog log;
};

// Direction dedup: positive multiples share a representative and its label,
// antipodal multiples the negated label.
struct DirectionDedup {
    std::vector<std::size_t> rep_position;  // positions into H, one per group
    std::vector<std::size_t> group_of;      // original index -> group
    std::vector<int> sign_vs_rep;           // +1 positive multiple, -1 antipodal
};

DirectionDedup dedup_directions(const std::vector<RatVec>& vectors);

// The randomized adaptive locator. Output equals the brute-force sign vector
// for the oracle's hidden point, exactly, including zeros.
LocateResult locate_randomized(const std::vector<Vec>& H, SignOracle& oracle,
                               const LocateConfig& cfg);

// Direct exact evaluation (the testing oracle for everything else).
SignVector bruteforce_locate(const std::vector<Vec>& H, const Vec& x);

// Cell conditions of the hidden point from one round's label answers and
// sorted order: adjacent-difference chain, in-group equalities, and the
// boundary labels that pin every group sign. Throws InconsistentOracle when
// the answers cannot come from a single point.
std::vector<SignCondition> conditions_from_round(const SortedGroups& groups,
                                                 const std::vector<int>& rep_labels,
                                                 const QuerySpace& qs);

}  // namespace pointloc
