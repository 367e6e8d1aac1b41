#include "selkow/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "selkow/sampler.hpp"

namespace selkow {

EnumerationLimitError::EnumerationLimitError(int n, int limit)
    : std::runtime_error("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                         std::to_string(limit) + " (" + std::to_string(n) + "! = " +
                         factorial(n).str() + " orderings); raise the limit to override") {}

namespace {

// Exact integer accumulators for one enumeration block. Residual sums are
// scaled by lcm(1..n) so each addend is an integer; int64 cannot overflow for
// n <= kEnumerationHardCap.
struct Accumulators {
    long long sum_i1 = 0;
    long long sum_i2 = 0;
    long long residual_parent = 0;   // lcm-scaled, parent degrees
    long long residual_shrunk = 0;   // lcm-scaled, residual degrees
    std::vector<long long> count_i1, count_i2, count_h;

    explicit Accumulators(int n) : count_i1(n, 0), count_i2(n, 0), count_h(n, 0) {}

    void merge(const Accumulators& other) {
        sum_i1 += other.sum_i1;
        sum_i2 += other.sum_i2;
        residual_parent += other.residual_parent;
        residual_shrunk += other.residual_shrunk;
        for (size_t v = 0; v < count_i1.size(); ++v) {
            count_i1[v] += other.count_i1[v];
            count_i2[v] += other.count_i2[v];
            count_h[v] += other.count_h[v];
        }
    }
};

long long lcm_upto(int n) {
    long long l = 1;
    for (int i = 2; i <= n; ++i) l = std::lcm(l, static_cast<long long>(i));
    return l;
}

// Enumerates, in lexicographic order, every rank array whose first entry
// (the rank of vertex 0) lies in `own_blocks`, feeding each to the scratch
// evaluator and accumulating exact integer tallies.
void enumerate_blocks(const Graph& g, const std::vector<int>& own_blocks, long long scale,
                      const std::vector<long long>& parent_weight, Accumulators& acc) {
    const int n = g.vertex_count();
    TwoPhaseScratch scratch;
    std::vector<int> rank(n);
    const auto consume = [&] {
        scratch.run(g, rank);
        acc.sum_i1 += scratch.i1_size();
        acc.sum_i2 += scratch.i2_size();
        for (int v = 0; v < n; ++v) {
            if (scratch.in_i1(v)) ++acc.count_i1[v];
            if (scratch.in_i2(v)) ++acc.count_i2[v];
            if (scratch.in_h(v)) {
                ++acc.count_h[v];
                acc.residual_parent += parent_weight[v];
                acc.residual_shrunk += scale / (scratch.h_degree(v) + 1);
            }
        }
    };
    if (n == 0) {
        consume();  // the single empty ordering
        return;
    }
    for (int first : own_blocks) {
        rank[0] = first;
        int next = 0;
        for (int v = 1; v < n; ++v) {
            if (next == first) ++next;
            rank[v] = next++;
        }
        do {
            consume();
        } while (std::next_permutation(rank.begin() + 1, rank.end()));
    }
}

}  // namespace

ExactStats enumerate_exact(const Graph& g, int limit, int threads) {
    const int n = g.vertex_count();
    const int effective_limit = std::min(limit, kEnumerationHardCap);
    if (n > effective_limit) throw EnumerationLimitError(n, effective_limit);

    const long long scale = lcm_upto(std::max(1, n));
    std::vector<long long> parent_weight(n);
    for (int v = 0; v < n; ++v) parent_weight[v] = scale / (g.degree(v) + 1);

    threads = std::clamp(threads, 1, std::max(1, n));
    std::vector<Accumulators> partial(threads, Accumulators(n));
    if (threads == 1) {
        std::vector<int> all_blocks(std::max(1, n));
        std::iota(all_blocks.begin(), all_blocks.end(), 0);
        if (n == 0) all_blocks.clear();
        enumerate_blocks(g, all_blocks, scale, parent_weight, partial[0]);
    } else {
        std::vector<std::vector<int>> blocks(threads);
        for (int b = 0; b < n; ++b) blocks[b % threads].push_back(b);
        std::vector<std::thread> workers;
        for (int w = 0; w < threads; ++w)
            workers.emplace_back([&, w] {
                enumerate_blocks(g, blocks[w], scale, parent_weight, partial[w]);
            });
        for (auto& th : workers) th.join();
    }
    Accumulators acc(n);
    for (const Accumulators& p : partial) acc.merge(p);

    ExactStats stats;
    stats.orderings = factorial(n);
    const BigInt total = stats.orderings;
    stats.expected_i1 = Rational(BigInt(acc.sum_i1), total);
    stats.expected_i2 = Rational(BigInt(acc.sum_i2), total);
    stats.expected_union = stats.expected_i1 + stats.expected_i2;
    stats.prob_in_i1.reserve(n);
    stats.prob_in_i2.reserve(n);
    stats.prob_in_h.reserve(n);
    for (int v = 0; v < n; ++v) {
        stats.prob_in_i1.emplace_back(BigInt(acc.count_i1[v]), total);
        stats.prob_in_i2.emplace_back(BigInt(acc.count_i2[v]), total);
        stats.prob_in_h.emplace_back(BigInt(acc.count_h[v]), total);
    }
    const BigInt scaled_total = total * scale;
    stats.expected_residual_cw = Rational(BigInt(acc.residual_parent), scaled_total);
    stats.expected_residual_cw_h = Rational(BigInt(acc.residual_shrunk), scaled_total);
    stats.expected_i1_plus_cwh = stats.expected_i1 + stats.expected_residual_cw_h;
    return stats;
}

namespace {

struct AlphaSearch {
    int n;
    std::vector<std::uint64_t> nbr;
    int best_size = 0;
    std::uint64_t best_mask = 0;

    void run(std::uint64_t candidates, std::uint64_t chosen, int size) {
        if (size + std::popcount(candidates) <= best_size) return;  // cannot beat incumbent
        if (candidates == 0) {
            best_size = size;
            best_mask = chosen;
            return;
        }
        // branch vertex: maximum degree inside the candidate set, smallest id on ties
        int pick = -1, pick_deg = -1;
        for (std::uint64_t rest = candidates; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = std::popcount(nbr[v] & candidates);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        const std::uint64_t bit = std::uint64_t(1) << pick;
        run(candidates & ~(nbr[pick] | bit), chosen | bit, size + 1);  // include
        run(candidates & ~bit, chosen, size);                          // exclude
    }
};

}  // namespace

AlphaResult brute_force_alpha(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kAlphaGuard)
        throw std::invalid_argument("brute_force_alpha: n=" + std::to_string(n) +
                                    " exceeds the n<=" + std::to_string(kAlphaGuard) +
                                    " search guard");
    AlphaSearch search;
    search.n = n;
    search.nbr.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) search.nbr[v] |= std::uint64_t(1) << u;

    // greedy incumbent gives the initial pruning bound
    const VertexSet greedy = min_degree_greedy(g);
    search.best_size = static_cast<int>(greedy.size());
    for (int v : greedy) search.best_mask |= std::uint64_t(1) << v;

    const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    search.run(all, 0, 0);

    AlphaResult out;
    out.alpha = search.best_size;
    for (int v = 0; v < n; ++v)
        if (search.best_mask >> v & 1) out.witness.push_back(v);
    if (!is_independent(g, out.witness) ||
        static_cast<int>(out.witness.size()) != out.alpha)
        throw std::logic_error("brute_force_alpha produced an invalid witness");
    return out;
}

RefutationReport refutation_check(const CounterexampleSpec& spec, int limit, int threads) {
    const Graph g = counterexample_graph(spec);
    const int n = spec.total_vertices();
    RefutationReport report;
    report.n = n;
    report.pendant = spec.pendant();
    report.favorable_orderings = binomial(n - 1, 2) * factorial(n - 3);
    report.total_orderings = factorial(n);
    report.closed_form = Rational(report.favorable_orderings, report.total_orderings);
    if (n <= std::min(limit, kEnumerationHardCap)) {
        const ExactStats stats = enumerate_exact(g, limit, threads);
        report.enumerated = stats.prob_in_i2[spec.pendant()];
        report.enumeration_matches = *report.enumerated == report.closed_form;
    }
    // the per-vertex claim being refuted, evaluated at the pendant (no clamp)
    const int d = g.degree(spec.pendant());
    Rational inner = Rational(d, d + 1);
    for (int u : g.neighbors(spec.pendant())) inner -= Rational(1, g.degree(u) + 1);
    report.claimed_rhs = inner / (d + 1);
    report.ratio = report.closed_form / report.claimed_rhs;
    report.refuted = report.closed_form < report.claimed_rhs;
    return report;
}

ProofChainReport verify_proof_chain(const Graph& g, int limit, int threads) {
    ProofChainReport report;
    report.stats = enumerate_exact(g, limit, threads);
    const BoundReport bounds = selkow_bound(g);
    report.cw = bounds.cw;
    report.selkow = bounds.selkow;

    const auto add_step = [&](std::string name, Rational lhs, std::string relation,
                              Rational rhs, bool pass) {
        report.steps.push_back(
            {std::move(name), std::move(lhs), std::move(relation), std::move(rhs), pass});
    };

    add_step("E|I1| == CW(G)", report.stats.expected_i1, "==", report.cw,
             report.stats.expected_i1 == report.cw);

    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational rhs = Rational(1, g.degree(v) + 1);
        for (int u : g.neighbors(v)) rhs += Rational(1, g.degree(u) + 1);
        const Rational lhs = Rational(1) - report.stats.prob_in_h[v];
        const bool pass = report.stats.prob_in_h[v] >= 0 && lhs <= rhs;
        add_step("union bound at v=" + std::to_string(v), lhs, "<=", rhs, pass);
    }

    const Rational chain_lhs = report.stats.expected_i1 + report.stats.expected_residual_cw;
    add_step("E|I1| + E[residual CW, parent degrees] >= selkow(G)", chain_lhs, ">=",
             report.selkow, chain_lhs >= report.selkow);

    add_step("E[residual CW, residual degrees] >= E[residual CW, parent degrees]",
             report.stats.expected_residual_cw_h, ">=", report.stats.expected_residual_cw,
             report.stats.expected_residual_cw_h >= report.stats.expected_residual_cw);

    report.all_pass = std::all_of(report.steps.begin(), report.steps.end(),
                                  [](const ChainStep& s) { return s.pass; });
    return report;
}

}  // namespace selkow
