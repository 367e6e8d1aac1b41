// Command-line front end: bounds, oracle enumeration, Monte Carlo / Las Vegas
// sampling, proof-chain verification and the counterexample family, with
// human, JSON and CSV output. Identical invocations produce identical bytes.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "selkow/bounds.hpp"
#include "selkow/graph.hpp"
#include "selkow/oracle.hpp"
#include "selkow/rational.hpp"
#include "selkow/sampler.hpp"

using nlohmann::ordered_json;
using namespace selkow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

// Fixed default seed: bare invocations are reproducible by design.
constexpr std::uint64_t kDefaultSeed = 0x5EED5EED5EED5EEDull;

struct CommonOpts {
    std::string input_path;
    std::string gen_spec;
    std::string format = "dimacs";
    bool one_based = false;
    std::string output = "human";
    std::uint64_t seed = kDefaultSeed;
    long long trials = 100000;
    int limit = kDefaultEnumerationLimit;
    int threads = 1;
};

struct SampleOpts {
    std::string estimands = "e_i1,e_i2";
    bool las_vegas = false;
    std::string target;  // rational like "17/8"; empty = strengthened bound
    int max_trials = kDefaultLasVegasTrials;
    std::optional<int> vertex;  // default vertex for p_i2 / p_h tokens
};

struct CounterexampleOpts {
    int n = 0;
    std::string base_kind = "empty";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    auto* in = cmd->add_option("--input", o.input_path, "graph file to read")
                   ->check(CLI::ExistingFile);
    auto* gen = cmd->add_option(
        "--gen", o.gen_spec,
        "generator spec: path:N, cycle:N, complete:N, star:LEAVES, empty:N, "
        "gnp:N:P:SEED, or ce:N[:empty|complete|path|gnp:P:SEED]");
    in->excludes(gen);
    gen->excludes(in);
    cmd->add_option("--format", o.format, "input file format")
        ->check(CLI::IsMember({"dimacs", "edges"}));
    cmd->add_flag("--one-based", o.one_based, "edge-list ids start at 1");
    cmd->add_option("--output", o.output, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--seed", o.seed, "64-bit seed for randomized subcommands");
    cmd->add_option("--trials", o.trials, "Monte Carlo trial count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--limit", o.limit, "largest n the exact enumeration accepts");
    cmd->add_option("--threads", o.threads, "worker threads for enumeration/sampling")
        ->check(CLI::PositiveNumber);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = s.find(sep, start);
        parts.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

Graph make_base(const std::string& kind, int base_n) {
    const std::vector<std::string> parts = split(kind, ':');
    if (parts[0] == "empty" && parts.size() == 1) return empty_graph(base_n);
    if (parts[0] == "complete" && parts.size() == 1) return complete_graph(base_n);
    if (parts[0] == "path" && parts.size() == 1) return path_graph(base_n);
    if (parts[0] == "gnp" && parts.size() == 3)
        return gnp_graph(base_n, std::stod(parts[1]), std::stoull(parts[2]));
    throw std::invalid_argument("unknown base kind '" + kind +
                                "' (want empty, complete, path, or gnp:P:SEED)");
}

// "ce:N[:KIND...]": the counterexample family over a named base on N-3 vertices.
Graph make_counterexample(std::string_view spec) {
    const std::vector<std::string> parts = split(spec, ':');
    if (parts.size() < 2) throw std::invalid_argument("ce spec needs a vertex count: ce:N");
    const int n = std::stoi(parts[1]);
    if (n < 4) throw std::invalid_argument("counterexample family needs n >= 4");
    std::string kind = "empty";
    if (parts.size() > 2) {
        kind = parts[2];
        for (size_t i = 3; i < parts.size(); ++i) kind += ":" + parts[i];
    }
    return counterexample_graph({make_base(kind, n - 3)});
}

Graph load_graph(const CommonOpts& o, std::string& source) {
    if (!o.gen_spec.empty()) {
        source = "gen " + o.gen_spec;
        if (o.gen_spec.rfind("ce:", 0) == 0) return make_counterexample(o.gen_spec);
        return parse_generator_spec(o.gen_spec);
    }
    if (o.input_path.empty())
        throw std::invalid_argument("exactly one of --input or --gen is required");
    source = "file " + o.input_path;
    std::ifstream in(o.input_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + o.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    return o.format == "dimacs" ? parse_dimacs(text) : parse_edge_list(text, o.one_based);
}

std::string rat_str(const Rational& r) { return r.str(); }

std::string dec_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

// exact value plus a fixed-precision decimal annotation
std::string annotated(const Rational& r) {
    return rat_str(r) + " (" + decimal_string(r) + ")";
}

ordered_json rational_json(const Rational& r) {
    return {{"num", numerator(r).str()},
            {"den", denominator(r).str()},
            {"decimal", decimal_string(r)}};
}

ordered_json graph_json(const Graph& g, const std::string& source) {
    return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"source", source}};
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i)
        os << (i ? "," : "") << csv_field(fields[i]);
    os << "\n";
}

// three CSV cells: numerator, denominator, decimal
void push_rational(std::vector<std::string>& row, const Rational& r) {
    row.push_back(numerator(r).str());
    row.push_back(denominator(r).str());
    row.push_back(decimal_string(r));
}

void print_graph_line(const Graph& g, const std::string& source) {
    std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges (" << source << ")\n";
}

int run_bounds(const CommonOpts& o) {
    std::string source;
    const Graph g = load_graph(o, source);
    const BoundReport rep = selkow_bound(g);

    if (o.output == "json") {
        ordered_json doc;
        doc["command"] = "bounds";
        doc["graph"] = graph_json(g, source);
        ordered_json per_vertex = ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            per_vertex.push_back({{"vertex", v},
                                  {"degree", g.degree(v)},
                                  {"cw_term", rational_json(rep.cw_term[v])},
                                  {"correction", rational_json(rep.correction[v])}});
        doc["per_vertex"] = std::move(per_vertex);
        doc["cw"] = rational_json(rep.cw);
        doc["selkow"] = rational_json(rep.selkow);
        std::cout << doc.dump(2) << "\n";
    } else if (o.output == "csv") {
        csv_row(std::cout, {"vertex", "degree", "cw_term_num", "cw_term_den",
                            "cw_term_decimal", "correction_num", "correction_den",
                            "correction_decimal"});
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<std::string> row{std::to_string(v), std::to_string(g.degree(v))};
            push_rational(row, rep.cw_term[v]);
            push_rational(row, rep.correction[v]);
            csv_row(std::cout, row);
        }
    } else {
        print_graph_line(g, source);
        std::cout << "vertex  degree  cw_term               correction\n";
        for (int v = 0; v < g.vertex_count(); ++v) {
            char head[32];
            std::snprintf(head, sizeof head, "%-7d %-7d ", v, g.degree(v));
            std::cout << head;
            std::string cw = annotated(rep.cw_term[v]);
            cw.resize(std::max<size_t>(cw.size(), 21), ' ');
            std::cout << cw << " " << annotated(rep.correction[v]) << "\n";
        }
        std::cout << "caro-wei: " << annotated(rep.cw) << "\n"
                  << "selkow:   " << annotated(rep.selkow) << "\n";
    }
    return kExitOk;
}

int run_oracle(const CommonOpts& o) {
    std::string source;
    const Graph g = load_graph(o, source);
    const ExactStats s = enumerate_exact(g, o.limit, o.threads);

    if (o.output == "json") {
        ordered_json doc;
        doc["command"] = "oracle";
        doc["graph"] = graph_json(g, source);
        doc["orderings"] = s.orderings.str();
        doc["expected_i1"] = rational_json(s.expected_i1);
        doc["expected_i2"] = rational_json(s.expected_i2);
        doc["expected_union"] = rational_json(s.expected_union);
        doc["expected_residual_cw"] = rational_json(s.expected_residual_cw);
        doc["expected_residual_cw_h"] = rational_json(s.expected_residual_cw_h);
        doc["expected_i1_plus_cwh"] = rational_json(s.expected_i1_plus_cwh);
        ordered_json per_vertex = ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v)
            per_vertex.push_back({{"vertex", v},
                                  {"degree", g.degree(v)},
                                  {"prob_i1", rational_json(s.prob_in_i1[v])},
                                  {"prob_i2", rational_json(s.prob_in_i2[v])},
                                  {"prob_h", rational_json(s.prob_in_h[v])}});
        doc["per_vertex"] = std::move(per_vertex);
        std::cout << doc.dump(2) << "\n";
    } else if (o.output == "csv") {
        csv_row(std::cout, {"vertex", "degree", "prob_i1_num", "prob_i1_den",
                            "prob_i1_decimal", "prob_i2_num", "prob_i2_den",
                            "prob_i2_decimal", "prob_h_num", "prob_h_den", "prob_h_decimal"});
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<std::string> row{std::to_string(v), std::to_string(g.degree(v))};
            push_rational(row, s.prob_in_i1[v]);
            push_rational(row, s.prob_in_i2[v]);
            push_rational(row, s.prob_in_h[v]);
            csv_row(std::cout, row);
        }
    } else {
        print_graph_line(g, source);
        std::cout << "orderings enumerated: " << s.orderings.str() << "\n"
                  << "E|I1|:                            " << annotated(s.expected_i1) << "\n"
                  << "E|I2|:                            " << annotated(s.expected_i2) << "\n"
                  << "E|I1 u I2|:                       " << annotated(s.expected_union)
                  << "\n"
                  << "E[residual CW, parent degrees]:   "
                  << annotated(s.expected_residual_cw) << "\n"
                  << "E[residual CW, residual degrees]: "
                  << annotated(s.expected_residual_cw_h) << "\n"
                  << "E|I1| + E[CW of residual]:        "
                  << annotated(s.expected_i1_plus_cwh) << "\n"
                  << "vertex  degree  p_i1                  p_i2                  p_h\n";
        for (int v = 0; v < g.vertex_count(); ++v) {
            char head[32];
            std::snprintf(head, sizeof head, "%-7d %-7d ", v, g.degree(v));
            std::cout << head;
            std::string a = annotated(s.prob_in_i1[v]), b = annotated(s.prob_in_i2[v]);
            a.resize(std::max<size_t>(a.size(), 21), ' ');
            b.resize(std::max<size_t>(b.size(), 21), ' ');
            std::cout << a << " " << b << " " << annotated(s.prob_in_h[v]) << "\n";
        }
    }
    return kExitOk;
}

std::vector<Estimand> parse_estimand_list(const std::string& csv, std::optional<int> fallback,
                                          const Graph& g) {
    std::vector<Estimand> out;
    for (const std::string& token : split(csv, ',')) {
        const size_t colon = token.find(':');
        int vertex = fallback.value_or(-1);
        std::string name = token;
        if (colon != std::string::npos) {
            name = token.substr(0, colon);
            vertex = std::stoi(token.substr(colon + 1));
        }
        Estimand e = parse_estimand(name, vertex);
        if (e.needs_vertex() && (e.vertex < 0 || e.vertex >= g.vertex_count()))
            throw std::invalid_argument("estimand " + name + " needs a vertex in 0.." +
                                        std::to_string(g.vertex_count() - 1));
        out.push_back(e);
    }
    return out;
}

int run_sample(const CommonOpts& o, const SampleOpts& so) {
    std::string source;
    const Graph g = load_graph(o, source);

    if (so.las_vegas) {
        const Rational target =
            so.target.empty() ? selkow_bound(g).selkow : Rational(so.target);
        const LasVegasResult r = las_vegas_search(g, target, so.max_trials, o.seed);
        if (o.output == "json") {
            ordered_json doc;
            doc["command"] = "sample";
            doc["mode"] = "las_vegas";
            doc["graph"] = graph_json(g, source);
            doc["seed"] = r.seed;
            doc["target"] = rational_json(r.target);
            doc["target_ceiling"] = r.target_ceiling.str();
            doc["max_trials"] = so.max_trials;
            doc["trials_used"] = r.trials_used;
            doc["reached"] = r.reached;
            doc["best_size"] = r.best_set.size();
            doc["best_set"] = r.best_set;
            std::cout << doc.dump(2) << "\n";
        } else if (o.output == "csv") {
            csv_row(std::cout, {"reached", "best_size", "trials_used", "target_num",
                                "target_den", "target_ceiling", "seed", "best_set"});
            std::string members;
            for (size_t i = 0; i < r.best_set.size(); ++i)
                members += (i ? ";" : "") + std::to_string(r.best_set[i]);
            csv_row(std::cout,
                    {r.reached ? "true" : "false", std::to_string(r.best_set.size()),
                     std::to_string(r.trials_used), numerator(r.target).str(),
                     denominator(r.target).str(), r.target_ceiling.str(),
                     std::to_string(r.seed), members});
        } else {
            print_graph_line(g, source);
            std::cout << "seed: " << r.seed << "\n"
                      << "target: " << annotated(r.target) << ", ceiling "
                      << r.target_ceiling.str() << "\n"
                      << "reached: " << (r.reached ? "yes" : "NO") << " (trials used: "
                      << r.trials_used << " of " << so.max_trials << ")\n"
                      << "best set (" << r.best_set.size() << "):";
            for (int v : r.best_set) std::cout << " " << v;
            std::cout << "\n";
        }
        return r.reached ? kExitOk : kExitCheckFailed;
    }

    const std::vector<Estimand> estimands = parse_estimand_list(so.estimands, so.vertex, g);
    const std::vector<EstimateReport> reports =
        monte_carlo(g, estimands, o.trials, o.seed, o.threads);
    if (o.output == "json") {
        ordered_json doc;
        doc["command"] = "sample";
        doc["mode"] = "monte_carlo";
        doc["graph"] = graph_json(g, source);
        doc["seed"] = o.seed;
        doc["trials"] = o.trials;
        ordered_json estimates = ordered_json::array();
        for (const EstimateReport& r : reports) {
            ordered_json e;
            e["estimand"] = r.estimand.name();
            if (r.estimand.needs_vertex())
                e["vertex"] = r.estimand.vertex;
            else
                e["vertex"] = nullptr;
            e["mean"] = rational_json(r.mean);
            e["standard_error"] = r.standard_error;
            estimates.push_back(std::move(e));
        }
        doc["estimates"] = std::move(estimates);
        std::cout << doc.dump(2) << "\n";
    } else if (o.output == "csv") {
        csv_row(std::cout, {"estimand", "vertex", "trials", "seed", "mean_num", "mean_den",
                            "mean_decimal", "standard_error"});
        for (const EstimateReport& r : reports) {
            std::vector<std::string> row{
                r.estimand.name(),
                r.estimand.needs_vertex() ? std::to_string(r.estimand.vertex) : "",
                std::to_string(r.trials), std::to_string(r.seed)};
            push_rational(row, r.mean);
            row.push_back(dec_str(r.standard_error));
            csv_row(std::cout, row);
        }
    } else {
        print_graph_line(g, source);
        std::cout << "seed: " << o.seed << "\ntrials: " << o.trials << "\n"
                  << "estimand  vertex  mean                      stderr\n";
        for (const EstimateReport& r : reports) {
            char head[32];
            std::snprintf(
                head, sizeof head, "%-9s %-7s ", r.estimand.name().c_str(),
                r.estimand.needs_vertex() ? std::to_string(r.estimand.vertex).c_str() : "-");
            std::cout << head;
            std::string mean = annotated(r.mean);
            mean.resize(std::max<size_t>(mean.size(), 25), ' ');
            std::cout << mean << " " << dec_str(r.standard_error) << "\n";
        }
    }
    return kExitOk;
}

int run_verify(const CommonOpts& o) {
    std::string source;
    const Graph g = load_graph(o, source);
    const ProofChainReport report = verify_proof_chain(g, o.limit, o.threads);
    const AlphaResult alpha = brute_force_alpha(g);

    // the bound sandwich rides along as two extra steps
    std::vector<ChainStep> steps = report.steps;
    steps.push_back({"caro-wei <= selkow", report.cw, "<=", report.selkow,
                     report.cw <= report.selkow});
    steps.push_back({"selkow <= alpha", report.selkow, "<=", Rational(alpha.alpha),
                     report.selkow <= Rational(alpha.alpha)});
    int failed = 0;
    for (const ChainStep& s : steps) failed += s.pass ? 0 : 1;

    if (o.output == "json") {
        ordered_json doc;
        doc["command"] = "verify";
        doc["graph"] = graph_json(g, source);
        doc["cw"] = rational_json(report.cw);
        doc["selkow"] = rational_json(report.selkow);
        doc["alpha"] = alpha.alpha;
        ordered_json checks = ordered_json::array();
        for (const ChainStep& s : steps)
            checks.push_back({{"name", s.name},
                              {"lhs", rational_json(s.lhs)},
                              {"relation", s.relation},
                              {"rhs", rational_json(s.rhs)},
                              {"pass", s.pass}});
        doc["checks"] = std::move(checks);
        doc["all_pass"] = failed == 0;
        std::cout << doc.dump(2) << "\n";
    } else if (o.output == "csv") {
        csv_row(std::cout, {"check", "relation", "lhs_num", "lhs_den", "lhs_decimal",
                            "rhs_num", "rhs_den", "rhs_decimal", "pass"});
        for (const ChainStep& s : steps) {
            std::vector<std::string> row{s.name, s.relation};
            push_rational(row, s.lhs);
            push_rational(row, s.rhs);
            row.push_back(s.pass ? "true" : "false");
            csv_row(std::cout, row);
        }
    } else {
        print_graph_line(g, source);
        for (const ChainStep& s : steps)
            std::cout << (s.pass ? "[ok]   " : "[FAIL] ") << s.name << ": " << rat_str(s.lhs)
                      << " " << s.relation << " " << rat_str(s.rhs) << "\n";
        if (failed == 0)
            std::cout << "all " << steps.size() << " checks passed\n";
        else
            std::cout << failed << " of " << steps.size() << " checks FAILED\n";
    }
    return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_counterexample(const CommonOpts& o, const CounterexampleOpts& co) {
    if (co.n < 4) throw std::invalid_argument("counterexample family needs --n >= 4");
    const CounterexampleSpec spec{make_base(co.base_kind, co.n - 3)};
    const RefutationReport r = refutation_check(spec, o.limit, o.threads);
    const std::string verdict =
        r.refuted ? "REFUTED (" + rat_str(r.closed_form) + " < " + rat_str(r.claimed_rhs) + ")"
                  : "not refuted at this size (" + rat_str(r.closed_form) + " >= " +
                        rat_str(r.claimed_rhs) + ")";

    if (o.output == "json") {
        ordered_json doc;
        doc["command"] = "counterexample";
        doc["n"] = r.n;
        doc["base"] = co.base_kind;
        doc["pendant"] = spec.pendant();
        doc["bridge"] = spec.bridge();
        doc["hub"] = spec.hub();
        doc["favorable_orderings"] = r.favorable_orderings.str();
        doc["total_orderings"] = r.total_orderings.str();
        doc["closed_form"] = rational_json(r.closed_form);
        doc["enumerated"] = r.enumerated ? rational_json(*r.enumerated) : ordered_json();
        doc["enumeration_matches"] = r.enumeration_matches;
        doc["claimed_rhs"] = rational_json(r.claimed_rhs);
        doc["ratio"] = rational_json(r.ratio);
        doc["refuted"] = r.refuted;
        std::cout << doc.dump(2) << "\n";
    } else if (o.output == "csv") {
        csv_row(std::cout,
                {"n", "base", "pendant", "favorable_orderings", "total_orderings",
                 "closed_num", "closed_den", "closed_decimal", "enumerated_num",
                 "enumerated_den", "enumeration_matches", "claimed_num", "claimed_den",
                 "ratio_num", "ratio_den", "ratio_decimal", "refuted"});
        std::vector<std::string> row{std::to_string(r.n), co.base_kind,
                                     std::to_string(r.pendant), r.favorable_orderings.str(),
                                     r.total_orderings.str()};
        push_rational(row, r.closed_form);
        row.push_back(r.enumerated ? numerator(*r.enumerated).str() : "");
        row.push_back(r.enumerated ? denominator(*r.enumerated).str() : "");
        row.push_back(r.enumeration_matches ? "true" : "false");
        row.push_back(numerator(r.claimed_rhs).str());
        row.push_back(denominator(r.claimed_rhs).str());
        push_rational(row, r.ratio);
        row.push_back(r.refuted ? "true" : "false");
        csv_row(std::cout, row);
    } else {
        std::cout << "counterexample family: n=" << r.n << " (base: " << co.base_kind
                  << " on " << co.n - 3 << " vertices)\n"
                  << "designated ids: pendant=" << spec.pendant()
                  << " bridge=" << spec.bridge() << " hub=" << spec.hub() << "\n"
                  << "favorable orderings: " << r.favorable_orderings.str() << " of "
                  << r.total_orderings.str() << "\n"
                  << "P(pendant in I2), closed form: " << annotated(r.closed_form) << "\n";
        if (r.enumerated)
            std::cout << "P(pendant in I2), enumerated:  " << annotated(*r.enumerated)
                      << (r.enumeration_matches ? "  [matches]" : "  [MISMATCH]") << "\n";
        else
            std::cout << "P(pendant in I2), enumerated:  skipped (n exceeds the limit)\n";
        std::cout << "claimed per-vertex bound: " << annotated(r.claimed_rhs) << "\n"
                  << "ratio: " << annotated(r.ratio) << "\n"
                  << "verdict: " << verdict << "\n";
    }
    return r.enumeration_matches ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "selkow: exact strengthened degree-sequence lower bounds on the graph "
        "independence number, with enumeration and sampling oracles"};
    app.require_subcommand(1);

    CommonOpts common;
    SampleOpts sample_opts;
    CounterexampleOpts ce_opts;

    CLI::App* bounds = app.add_subcommand(
        "bounds", "per-vertex terms and totals of both lower bounds");
    add_common(bounds, common);

    CLI::App* oracle = app.add_subcommand(
        "oracle", "exact expectations/probabilities over all n! orderings");
    add_common(oracle, common);

    CLI::App* sample = app.add_subcommand(
        "sample", "Monte Carlo estimates, or a Las Vegas independent-set search");
    add_common(sample, common);
    sample->add_option("--estimands", sample_opts.estimands,
                       "comma list of e_i1, e_i2, p_i2:V, p_h:V");
    sample->add_option("--vertex", sample_opts.vertex,
                       "default vertex for p_i2 / p_h tokens without :V");
    sample->add_flag("--las-vegas", sample_opts.las_vegas,
                     "search for an independent set of size >= ceil(target)");
    sample->add_option("--target", sample_opts.target,
                       "Las Vegas target as a rational (default: the strengthened bound)");
    sample->add_option("--max-trials", sample_opts.max_trials, "Las Vegas trial cap")
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand(
        "verify", "exact proof-chain checks plus the bound sandwich against alpha");
    add_common(verify, common);

    CLI::App* counterexample = app.add_subcommand(
        "counterexample", "the pendant-bridge-hub family refuting the per-vertex claim");
    counterexample->add_option("--n", ce_opts.n, "total vertex count (>= 4)")->required();
    counterexample->add_option("--f", ce_opts.base_kind,
                               "base graph: empty, complete, path, or gnp:P:SEED");
    counterexample->add_option("--output", common.output, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    counterexample->add_option("--limit", common.limit,
                               "largest n the exact enumeration accepts");
    counterexample->add_option("--threads", common.threads,
                               "worker threads for enumeration")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (bounds->parsed()) return run_bounds(common);
        if (oracle->parsed()) return run_oracle(common);
        if (sample->parsed()) return run_sample(common, sample_opts);
        if (verify->parsed()) return run_verify(common);
        if (counterexample->parsed()) return run_counterexample(common, ce_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;  // unreachable: a subcommand is required
}
