#pragma once

#include <string>

#include "pointloc/rational.hpp"

namespace pointloc {

enum class QueryKind { Label, Comparison, Generalized };

// A query vector alpha*H[i] - beta*H[j] with provenance. Coefficients are
// normalized to |alpha| + |beta| = 1 exactly over rationals; the double
// fields mirror them for export. The exact vector is what oracles answer
// and what inference consumes, so sign chains stay consistent through ties.
struct GenComparisonQuery {
    static constexpr int kNone = -1;
    int i = kNone;
    int j = kNone;
    double alpha = 0.0;
    double beta = 0.0;
    Vec vector;            // alpha*H[i] - beta*H[j] in doubles
    RatVec exact_vector;   // exact_alpha*H[i] - exact_beta*H[j]
    Rat exact_alpha;
    Rat exact_beta;

    QueryKind kind() const;
};

struct TranscriptEntry {
    GenComparisonQuery query;
    int answer = 0;
};

struct QueryTranscript {
    std::vector<TranscriptEntry> entries;
    std::size_t labels = 0;
    std::size_t comparisons = 0;
    std::size_t generalized = 0;

    std::size_t total() const { return entries.size(); }
    void record(const GenComparisonQuery& q, int answer);
    // "kind,i,j,alpha,beta,answer" per line, 17 significant digits.
    std::string to_csv() const;
};

// Answer source for sign(<q, x>). Deterministic within a session.
class SignOracle {
  public:
    virtual ~SignOracle() = default;
    virtual int answer(const RatVec& query) = 0;
};

// Holds a concrete point; answers by exact rational dot product.
class PointOracle final : public SignOracle {
  public:
    explicit PointOracle(const Vec& x) : x_(rat_vec(x)) {}
    explicit PointOracle(RatVec x) : x_(std::move(x)) {}
    int answer(const RatVec& q) override { return sign_dot(q, x_); }
    const RatVec& point() const { return x_; }

  private:
    RatVec x_;
};

// Original hyperplane list with exact mirrors; the factory every legal query
// goes through.
class QuerySpace {
  public:
    explicit QuerySpace(std::vector<Vec> H);

    std::size_t size() const { return h_.size(); }
    std::size_t dim() const { return d_; }
    const std::vector<Vec>& vectors() const { return h_; }
    const Vec& vector(std::size_t i) const { return h_[i]; }
    const RatVec& exact(std::size_t i) const { return exact_[i]; }

    // Renormalizes (a, b) to |alpha|+|beta| = 1 and materializes the vector.
    // Rejects zero query vectors.
    GenComparisonQuery make_query(int i, int j, double a, double b) const;

  private:
    std::size_t d_;
    std::vector<Vec> h_;
    std::vector<RatVec> exact_;
};

int ask(SignOracle& oracle, const GenComparisonQuery& q, QueryTranscript& transcript);

// One sort item: the vector sig * scale * H[index].
struct SortItem {
    int index = 0;
    int sig = 1;          // +1 or -1
    double scale = 1.0;   // positive

    RatVec exact_vector(const QuerySpace& qs) const;
};

using SortedGroups = std::vector<std::vector<SortItem>>;

// Resumable bottom-up mergesort with ternary comparisons and explicit
// equality groups. Value semantics: tree builders fork mid-sort.
class MergeSorter {
  public:
    explicit MergeSorter(std::vector<SortItem> items);

    bool done() const;
    std::pair<SortItem, SortItem> next_comparison() const;
    void apply(int answer);  // sign(key(first) - key(second))
    const SortedGroups& result() const;
    std::size_t comparisons_used() const { return comparisons_; }

  private:
    void advance();

    std::vector<SortedGroups> runs_;
    SortedGroups left_, right_, merged_;
    std::size_t li_ = 0, ri_ = 0;
    bool merging_ = false;
    std::size_t comparisons_ = 0;
};

// Ascending order of <sig*scale*H[index], x> with ties as groups, using only
// three-way generalized comparison queries between two items.
SortedGroups sort_by_inner_product(SignOracle& oracle, const std::vector<SortItem>& items,
                                   const QuerySpace& qs, QueryTranscript& transcript);

}  // namespace pointloc
