// Exact small-graph verification: enumerate all n! orderings to obtain every
// expectation and probability of the two-phase process as exact rationals,
// brute-force the independence number, reproduce the counterexample family's
// second-phase probability, and check the bound's inequality chain step by
// step.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selkow/bounds.hpp"
#include "selkow/graph.hpp"
#include "selkow/rational.hpp"

namespace selkow {

inline constexpr int kDefaultEnumerationLimit = 10;
// Above this the int64 accumulators could overflow (and n! is hopeless anyway).
inline constexpr int kEnumerationHardCap = 14;

class EnumerationLimitError : public std::runtime_error {
public:
    EnumerationLimitError(int n, int limit);
};

struct ExactStats {
    BigInt orderings;  // n!
    Rational expected_i1;
    Rational expected_i2;
    Rational expected_union;  // expected_i1 + expected_i2
    std::vector<Rational> prob_in_i1;  // equals 1/(d(v)+1) for every v
    std::vector<Rational> prob_in_i2;
    std::vector<Rational> prob_in_h;
    // E[sum over residual vertices of 1/(d_G(v)+1)] -- parent degrees.
    Rational expected_residual_cw;
    // E[sum over residual vertices of 1/(d_H(v)+1)] -- residual degrees;
    // dominates expected_residual_cw because degrees only shrink.
    Rational expected_residual_cw_h;
    // E[|I1| + CW(H)] = expected_i1 + expected_residual_cw_h.
    Rational expected_i1_plus_cwh;
};

// Iterates all n! orderings (lexicographically, by blocks on the rank of
// vertex 0 when threaded) and divides exact integer sums by n! once at the
// end. Identical results for any thread count.
ExactStats enumerate_exact(const Graph& g, int limit = kDefaultEnumerationLimit,
                           int threads = 1);

struct AlphaResult {
    int alpha = 0;
    VertexSet witness;  // one maximum independent set
};

// Branch and bound on a max-degree vertex (exclude vs include-and-delete-
// closed-neighborhood), seeded with the greedy incumbent. Guard: n <= 30.
AlphaResult brute_force_alpha(const Graph& g);

inline constexpr int kAlphaGuard = 30;

struct RefutationReport {
    int n = 0;                     // vertices of the assembled graph
    int pendant = 0;               // the vertex whose probability collapses
    BigInt favorable_orderings;    // C(n-1,2) * (n-3)!
    BigInt total_orderings;        // n!
    Rational closed_form;          // favorable / total, reduces to 1/(2n)
    std::optional<Rational> enumerated;  // present when n is enumerable
    bool enumeration_matches = true;     // closed form == enumerated when both exist
    Rational claimed_rhs;          // the refuted per-vertex claim, 1/12 here
    Rational ratio;                // closed_form / claimed_rhs = 6/n
    bool refuted = false;          // closed_form < claimed_rhs, i.e. n >= 7
};

RefutationReport refutation_check(const CounterexampleSpec& spec,
                                  int limit = kDefaultEnumerationLimit, int threads = 1);

struct ChainStep {
    std::string name;
    Rational lhs;
    std::string relation;  // "==", "<=", ">="
    Rational rhs;
    bool pass = false;
};

struct ProofChainReport {
    ExactStats stats;
    Rational cw;
    Rational selkow;
    std::vector<ChainStep> steps;
    bool all_pass = false;
};

// Exact checks, for the given graph, of each inequality the strengthened
// bound's derivation relies on: E|I1| = CW(G); the per-vertex union bound on
// leaving the residual graph; E|I1| + E[residual CW with parent degrees] >=
// selkow bound; and domination of parent-degree weights by residual-degree
// weights.
ProofChainReport verify_proof_chain(const Graph& g, int limit = kDefaultEnumerationLimit,
                                    int threads = 1);

}  // namespace selkow
