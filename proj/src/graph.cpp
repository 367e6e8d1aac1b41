#include "selkow/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "selkow/rng.hpp"

namespace selkow {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    long long m = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        m += static_cast<long long>(list.size());
    }
    g.m_ = m / 2;
    g.check_invariants();
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

void Graph::check_invariants() const {
    long long degree_sum = 0;
    for (int v = 0; v < n_; ++v) {
        const auto& list = adj_[v];
        degree_sum += static_cast<long long>(list.size());
        for (size_t i = 0; i < list.size(); ++i) {
            const int u = list[i];
            if (u < 0 || u >= n_) throw std::logic_error("adjacency id out of range");
            if (u == v) throw std::logic_error("self-loop in adjacency");
            if (i > 0 && list[i - 1] >= u) throw std::logic_error("adjacency not sorted unique");
            if (!has_edge(u, v)) throw std::logic_error("adjacency not symmetric");
        }
    }
    if (degree_sum != 2 * m_) throw std::logic_error("edge count inconsistent");
}

namespace {

int parse_int_token(const std::string& tok, int line, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;  // blank line
        if (kind == "c") continue;
        if (kind == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate problem line");
            std::string format, ns, ms;
            if (!(ls >> format >> ns >> ms) || format != "edge")
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = parse_int_token(ns, line_no, "vertex count");
            const int m = parse_int_token(ms, line_no, "edge count");
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            edges.reserve(static_cast<size_t>(m));
        } else if (kind == "e") {
            if (n < 0) throw ParseError(line_no, "edge before 'p edge' header");
            std::string us, vs;
            if (!(ls >> us >> vs)) throw ParseError(line_no, "malformed edge line");
            const int u = parse_int_token(us, line_no, "vertex id");
            const int v = parse_int_token(vs, line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_no, "self-loop");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(line_no, "unknown line type '" + kind + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing 'p edge' header");
    return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list(std::string_view text, bool one_based) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    const int lowest = one_based ? 1 : 0;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string us, vs, extra;
        if (!(ls >> us)) continue;
        if (us[0] == '#') continue;
        if (!(ls >> vs)) throw ParseError(line_no, "expected two vertex ids");
        if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
        int u = parse_int_token(us, line_no, "vertex id");
        int v = parse_int_token(vs, line_no, "vertex id");
        if (u < lowest || v < lowest)
            throw ParseError(line_no, "vertex id below " + std::to_string(lowest));
        if (one_based) {
            --u;
            --v;
        }
        if (u == v) throw ParseError(line_no, "self-loop");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(max_id + 1, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star requires leaves >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph empty_graph(int n) { return Graph::from_edge_list(n, {}); }

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp requires n >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp requires 0 <= p <= 1");
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (bernoulli(gen, p)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

namespace {

std::vector<std::string> split_colon(std::string_view spec) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = spec.find(':', start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(spec.substr(start));
            return parts;
        }
        parts.emplace_back(spec.substr(start, pos - start));
        start = pos + 1;
    }
}

int spec_int(const std::string& tok, const std::string& spec) {
    try {
        size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + tok + "' in generator spec '" + spec + "'");
    }
}

}  // namespace

Graph parse_generator_spec(std::string_view spec) {
    const std::string text(spec);
    const auto parts = split_colon(spec);
    const std::string& kind = parts[0];
    const auto expect_parts = [&](size_t count) {
        if (parts.size() != count)
            throw std::invalid_argument("generator spec '" + text + "' has wrong arity");
    };
    if (kind == "path") {
        expect_parts(2);
        return path_graph(spec_int(parts[1], text));
    }
    if (kind == "cycle") {
        expect_parts(2);
        return cycle_graph(spec_int(parts[1], text));
    }
    if (kind == "complete") {
        expect_parts(2);
        return complete_graph(spec_int(parts[1], text));
    }
    if (kind == "star") {
        expect_parts(2);
        return star_graph(spec_int(parts[1], text));
    }
    if (kind == "empty") {
        expect_parts(2);
        return empty_graph(spec_int(parts[1], text));
    }
    if (kind == "gnp") {
        expect_parts(4);
        double p = 0.0;
        try {
            size_t used = 0;
            p = std::stod(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad probability '" + parts[2] + "' in generator spec '" +
                                        text + "'");
        }
        const auto seed = static_cast<std::uint64_t>(std::stoull(parts[3]));
        return gnp_graph(spec_int(parts[1], text), p, seed);
    }
    throw std::invalid_argument("unknown generator kind '" + kind + "'");
}

Graph counterexample_graph(const CounterexampleSpec& spec) {
    const int base_n = spec.base.vertex_count();
    if (base_n < 1) throw std::invalid_argument("counterexample base graph needs >= 1 vertex");
    const int n = spec.total_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < base_n; ++u)
        for (int v : spec.base.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    edges.emplace_back(spec.pendant(), spec.bridge());
    edges.emplace_back(spec.bridge(), spec.hub());
    for (int y = 0; y < base_n; ++y) edges.emplace_back(spec.hub(), y);
    return Graph::from_edge_list(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.to_sub.assign(g.vertex_count(), -1);
    out.to_parent = keep;
    for (size_t i = 0; i < keep.size(); ++i) {
        const int v = keep[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (out.to_sub[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        out.to_sub[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int u : g.neighbors(v))
            if (u > v && out.to_sub[u] != -1) edges.emplace_back(out.to_sub[v], out.to_sub[u]);
    out.graph = Graph::from_edge_list(static_cast<int>(keep.size()), edges);
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        for (int u : g.neighbors(v))
            if (std::binary_search(s.begin(), s.end(), u)) return false;
    return true;
}

}  // namespace selkow
