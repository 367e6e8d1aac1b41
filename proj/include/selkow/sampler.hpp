// Randomized two-phase machinery: uniform orderings, the first-phase set of
// order-local-minima, the residual graph left after deleting the first phase
// with its neighborhoods, the second-phase set, the min-degree greedy, a Las
// Vegas search for an independent set hitting the strengthened bound, and a
// reproducible Monte Carlo estimator.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selkow/graph.hpp"
#include "selkow/rational.hpp"
#include "selkow/rng.hpp"

namespace selkow {

// Total order on the vertices: rank[v] is the position of v in 0..n-1.
struct Ordering {
    std::vector<int> rank;

    int size() const { return static_cast<int>(rank.size()); }
    bool before(int u, int v) const { return rank[u] < rank[v]; }
    // position -> vertex
    std::vector<int> by_position() const;

    static Ordering identity(int n);
    // Validates that `ranks` is a bijection onto 0..n-1.
    static Ordering from_ranks(std::vector<int> ranks);
};

// Uniform random permutation via Fisher-Yates over unbiased bounded draws.
Ordering sample_ordering(int n, std::mt19937_64& gen);

// Vertices ranked before all of their neighbors. Always independent.
VertexSet phase_one(const Graph& g, const Ordering& ord);

struct ResidualResult {
    VertexSet vertices;  // parent ids surviving the first phase
    InducedSubgraph sub;
};

// Deletes i1 and every neighbor of i1; the rest induces the residual graph.
ResidualResult residual(const Graph& g, const VertexSet& i1);

// Local minima of the residual graph under the inherited ordering, reported
// as parent ids. The union with the first phase is independent in the parent.
VertexSet phase_two(const ResidualResult& res, const Ordering& ord);

struct TwoPhaseResult {
    VertexSet i1;
    VertexSet h_vertices;
    VertexSet i2;
    int union_size = 0;
};

TwoPhaseResult two_phase(const Graph& g, const Ordering& ord);

// Allocation-free variant of two_phase for hot loops (enumeration, Monte
// Carlo). Also reports residual degrees, which two_phase does not need.
class TwoPhaseScratch {
public:
    void run(const Graph& g, const std::vector<int>& rank);

    int i1_size() const { return i1_size_; }
    int i2_size() const { return i2_size_; }
    int h_size() const { return h_size_; }
    bool in_i1(int v) const { return i1_[v] != 0; }
    bool in_i2(int v) const { return i2_[v] != 0; }
    bool in_h(int v) const { return h_[v] != 0; }
    int h_degree(int v) const { return hdeg_[v]; }  // meaningful when in_h(v)

private:
    std::vector<std::uint8_t> i1_, h_, i2_;
    std::vector<int> hdeg_;
    int i1_size_ = 0, i2_size_ = 0, h_size_ = 0;
};

// Repeatedly takes a minimum-degree vertex of the shrinking graph (smallest
// id on ties) and deletes its closed neighborhood. The result is independent
// and at least as large as the Caro-Wei bound.
VertexSet min_degree_greedy(const Graph& g);

inline constexpr int kDefaultLasVegasTrials = 10000;

struct LasVegasResult {
    VertexSet best_set;      // verified independent in g
    Rational target;
    BigInt target_ceiling;   // the integer goal actually chased
    int trials_used = 0;
    bool reached = false;
    std::uint64_t seed = 0;
};

// Per trial: sample an ordering, take the first-phase set plus the greedy on
// the residual graph. Stops early once the combined size reaches
// ceil(target); not reaching it within max_trials is reported via `reached`.
LasVegasResult las_vegas_search(const Graph& g, const Rational& target,
                                int max_trials = kDefaultLasVegasTrials,
                                std::uint64_t seed = 0);

enum class EstimandKind {
    MeanI1,  // E|I1|
    MeanI2,  // E|I2|
    ProbI2,  // P(vertex in I2)
    ProbH,   // P(vertex in V(H))
};

struct Estimand {
    EstimandKind kind;
    int vertex = -1;  // required for ProbI2/ProbH

    bool needs_vertex() const {
        return kind == EstimandKind::ProbI2 || kind == EstimandKind::ProbH;
    }
    std::string name() const;  // canonical token: e_i1, e_i2, p_i2, p_h
};

// Token -> estimand; throws on unknown tokens or a missing/invalid vertex.
Estimand parse_estimand(std::string_view token, int vertex = -1);

struct EstimateReport {
    Estimand estimand;
    long long trials = 0;
    Rational mean;          // exact: observation sum / trials
    double standard_error = 0.0;  // 0 by convention when trials == 1
    std::uint64_t seed = 0;
};

// One fresh ordering per trial, seeded from (seed, trial index); all
// estimands observe the same trial. Bit-identical for any thread count.
std::vector<EstimateReport> monte_carlo(const Graph& g, const std::vector<Estimand>& estimands,
                                        long long trials, std::uint64_t seed, int threads = 1);

}  // namespace selkow
