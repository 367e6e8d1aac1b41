#include "selkow/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace selkow {

std::vector<int> Ordering::by_position() const {
    std::vector<int> order(rank.size());
    for (size_t v = 0; v < rank.size(); ++v) order[rank[v]] = static_cast<int>(v);
    return order;
}

Ordering Ordering::identity(int n) {
    Ordering o;
    o.rank.resize(n);
    std::iota(o.rank.begin(), o.rank.end(), 0);
    return o;
}

Ordering Ordering::from_ranks(std::vector<int> ranks) {
    const int n = static_cast<int>(ranks.size());
    std::vector<char> seen(n, 0);
    for (int r : ranks) {
        if (r < 0 || r >= n || seen[r]) throw std::invalid_argument("ranks are not a bijection");
        seen[r] = 1;
    }
    Ordering o;
    o.rank = std::move(ranks);
    return o;
}

Ordering sample_ordering(int n, std::mt19937_64& gen) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[uniform_below(gen, static_cast<std::uint64_t>(i) + 1)]);
    Ordering o;
    o.rank.resize(n);
    for (int pos = 0; pos < n; ++pos) o.rank[order[pos]] = pos;
    return o;
}

VertexSet phase_one(const Graph& g, const Ordering& ord) {
    if (ord.size() != g.vertex_count())
        throw std::invalid_argument("ordering size does not match graph");
    VertexSet i1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool local_min = true;
        for (int u : g.neighbors(v)) {
            if (!ord.before(v, u)) {
                local_min = false;
                break;
            }
        }
        if (local_min) i1.push_back(v);
    }
    return i1;
}

ResidualResult residual(const Graph& g, const VertexSet& i1) {
    std::vector<char> drop(g.vertex_count(), 0);
    for (int v : i1) {
        drop[v] = 1;
        for (int u : g.neighbors(v)) drop[u] = 1;
    }
    ResidualResult res;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!drop[v]) res.vertices.push_back(v);
    res.sub = induced_subgraph(g, res.vertices);
    return res;
}

VertexSet phase_two(const ResidualResult& res, const Ordering& ord) {
    VertexSet i2;
    const Graph& h = res.sub.graph;
    for (int s = 0; s < h.vertex_count(); ++s) {
        const int v = res.sub.to_parent[s];
        bool local_min = true;
        for (int t : h.neighbors(s)) {
            if (!ord.before(v, res.sub.to_parent[t])) {
                local_min = false;
                break;
            }
        }
        if (local_min) i2.push_back(v);
    }
    return i2;
}

TwoPhaseResult two_phase(const Graph& g, const Ordering& ord) {
    TwoPhaseResult out;
    out.i1 = phase_one(g, ord);
    ResidualResult res = residual(g, out.i1);
    out.i2 = phase_two(res, ord);
    out.h_vertices = std::move(res.vertices);
    out.union_size = static_cast<int>(out.i1.size() + out.i2.size());
    return out;
}

void TwoPhaseScratch::run(const Graph& g, const std::vector<int>& rank) {
    const int n = g.vertex_count();
    i1_.assign(n, 0);
    h_.assign(n, 0);
    i2_.assign(n, 0);
    hdeg_.assign(n, 0);
    i1_size_ = i2_size_ = h_size_ = 0;

    for (int v = 0; v < n; ++v) {
        bool local_min = true;
        for (int u : g.neighbors(v)) {
            if (rank[u] < rank[v]) {
                local_min = false;
                break;
            }
        }
        if (local_min) {
            i1_[v] = 1;
            ++i1_size_;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (i1_[v]) continue;
        bool removed = false;
        for (int u : g.neighbors(v)) {
            if (i1_[u]) {
                removed = true;
                break;
            }
        }
        if (!removed) {
            h_[v] = 1;
            ++h_size_;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!h_[v]) continue;
        int deg = 0;
        bool local_min = true;
        for (int u : g.neighbors(v)) {
            if (h_[u]) {
                ++deg;
                if (rank[u] < rank[v]) local_min = false;
            }
        }
        hdeg_[v] = deg;
        if (local_min) {
            i2_[v] = 1;
            ++i2_size_;
        }
    }
}

VertexSet min_degree_greedy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    VertexSet picked;
    while (remaining > 0) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
        picked.push_back(best);
        // delete the closed neighborhood, updating shrinking-graph degrees
        alive[best] = 0;
        --remaining;
        for (int u : g.neighbors(best)) {
            if (!alive[u]) continue;
            alive[u] = 0;
            --remaining;
            for (int w : g.neighbors(u))
                if (alive[w]) --deg[w];
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

LasVegasResult las_vegas_search(const Graph& g, const Rational& target, int max_trials,
                                std::uint64_t seed) {
    if (max_trials < 1) throw std::invalid_argument("las_vegas_search: max_trials must be >= 1");
    LasVegasResult out;
    out.target = target;
    out.target_ceiling = ceil_rational(target);
    out.seed = seed;
    long long best_score = -1;
    for (int t = 0; t < max_trials; ++t) {
        std::mt19937_64 gen(derive_stream_seed(seed, static_cast<std::uint64_t>(t)));
        const Ordering ord = sample_ordering(g.vertex_count(), gen);
        const VertexSet i1 = phase_one(g, ord);
        const ResidualResult res = residual(g, i1);
        const VertexSet greedy_sub = min_degree_greedy(res.sub.graph);
        VertexSet candidate = i1;
        for (int s : greedy_sub) candidate.push_back(res.sub.to_parent[s]);
        std::sort(candidate.begin(), candidate.end());
        if (!is_independent(g, candidate))
            throw std::logic_error("las_vegas_search produced a dependent set");
        const auto score = static_cast<long long>(candidate.size());
        if (score > best_score) {
            best_score = score;
            out.best_set = std::move(candidate);
        }
        out.trials_used = t + 1;
        if (BigInt(best_score) >= out.target_ceiling) {
            out.reached = true;
            break;
        }
    }
    return out;
}

std::string Estimand::name() const {
    switch (kind) {
        case EstimandKind::MeanI1: return "e_i1";
        case EstimandKind::MeanI2: return "e_i2";
        case EstimandKind::ProbI2: return "p_i2";
        case EstimandKind::ProbH: return "p_h";
    }
    return "?";
}

Estimand parse_estimand(std::string_view token, int vertex) {
    Estimand e;
    if (token == "e_i1") {
        e.kind = EstimandKind::MeanI1;
    } else if (token == "e_i2") {
        e.kind = EstimandKind::MeanI2;
    } else if (token == "p_i2") {
        e.kind = EstimandKind::ProbI2;
    } else if (token == "p_h") {
        e.kind = EstimandKind::ProbH;
    } else {
        throw std::invalid_argument("unknown estimand '" + std::string(token) +
                                    "' (expected e_i1, e_i2, p_i2 or p_h)");
    }
    if (e.needs_vertex()) {
        if (vertex < 0)
            throw std::invalid_argument("estimand '" + std::string(token) +
                                        "' needs a target vertex");
        e.vertex = vertex;
    }
    return e;
}

namespace {

struct TrialSums {
    long long sum = 0;
    long long sum_sq = 0;
};

void run_trials(const Graph& g, const std::vector<Estimand>& estimands, long long lo,
                long long hi, std::uint64_t seed, std::vector<TrialSums>& sums) {
    TwoPhaseScratch scratch;
    for (long long t = lo; t < hi; ++t) {
        std::mt19937_64 gen(derive_stream_seed(seed, static_cast<std::uint64_t>(t)));
        const Ordering ord = sample_ordering(g.vertex_count(), gen);
        scratch.run(g, ord.rank);
        for (size_t i = 0; i < estimands.size(); ++i) {
            long long x = 0;
            switch (estimands[i].kind) {
                case EstimandKind::MeanI1: x = scratch.i1_size(); break;
                case EstimandKind::MeanI2: x = scratch.i2_size(); break;
                case EstimandKind::ProbI2: x = scratch.in_i2(estimands[i].vertex) ? 1 : 0; break;
                case EstimandKind::ProbH: x = scratch.in_h(estimands[i].vertex) ? 1 : 0; break;
            }
            sums[i].sum += x;
            sums[i].sum_sq += x * x;
        }
    }
}

}  // namespace

std::vector<EstimateReport> monte_carlo(const Graph& g, const std::vector<Estimand>& estimands,
                                        long long trials, std::uint64_t seed, int threads) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
    if (estimands.empty()) throw std::invalid_argument("monte_carlo: no estimands requested");
    for (const Estimand& e : estimands) {
        if (e.needs_vertex() && (e.vertex < 0 || e.vertex >= g.vertex_count()))
            throw std::invalid_argument("monte_carlo: estimand vertex out of range");
    }
    threads = std::clamp<long long>(threads, 1, trials);

    std::vector<std::vector<TrialSums>> partial(threads,
                                                std::vector<TrialSums>(estimands.size()));
    if (threads == 1) {
        run_trials(g, estimands, 0, trials, seed, partial[0]);
    } else {
        std::vector<std::thread> workers;
        const long long chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const long long lo = w * chunk;
            const long long hi = std::min(trials, lo + chunk);
            workers.emplace_back([&, w, lo, hi] { run_trials(g, estimands, lo, hi, seed, partial[w]); });
        }
        for (auto& th : workers) th.join();
    }

    std::vector<TrialSums> total(estimands.size());
    for (const auto& part : partial)
        for (size_t i = 0; i < part.size(); ++i) {
            total[i].sum += part[i].sum;
            total[i].sum_sq += part[i].sum_sq;
        }

    std::vector<EstimateReport> reports;
    reports.reserve(estimands.size());
    for (size_t i = 0; i < estimands.size(); ++i) {
        EstimateReport rep;
        rep.estimand = estimands[i];
        rep.trials = trials;
        rep.seed = seed;
        rep.mean = Rational(BigInt(total[i].sum), BigInt(trials));
        if (trials > 1) {
            const double s = static_cast<double>(total[i].sum);
            const double ss = static_cast<double>(total[i].sum_sq);
            const double t = static_cast<double>(trials);
            const double variance = std::max(0.0, (ss - s * s / t) / (t - 1.0));
            rep.standard_error = std::sqrt(variance / t);
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

}  // namespace selkow
