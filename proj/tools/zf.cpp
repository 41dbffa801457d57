// zf: exact solvers for failed zero forcing invariants, the independent-set
// gadget reduction, and a batch verification harness.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "zf/enumerate.hpp"
#include "zf/forcing.hpp"
#include "zf/io.hpp"
#include "zf/random.hpp"
#include "zf/reduction.hpp"
#include "zf/solvers.hpp"
#include "zf/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

struct GraphArgs {
    std::string path;
    std::string inline_text;
    std::string format = "edgelist";
    bool connectify = false;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool with_connectify = false) {
    auto* path = cmd->add_option("--graph", args.path, "graph file path ('-' for stdin)");
    auto* inl = cmd->add_option("--inline", args.inline_text,
                                "inline graph text; '/' and ';' act as newlines");
    cmd->add_option("--format", args.format, "graph file format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    if (with_connectify)
        cmd->add_flag("--connectify", args.connectify,
                      "add a universal vertex before processing");
    path->excludes(inl);
}

zf::GraphFormat format_of(const GraphArgs& args) {
    return args.format == "dimacs" ? zf::GraphFormat::dimacs : zf::GraphFormat::edgelist;
}

zf::Graph load_graph(const GraphArgs& args) {
    zf::ParseResult res;
    if (!args.inline_text.empty()) {
        std::string text = args.inline_text;
        for (char& c : text)
            if (c == '/' || c == ';') c = '\n';
        res = zf::parse_graph(text, format_of(args));
    } else if (args.path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        res = zf::parse_graph(buf.str(), format_of(args));
    } else if (!args.path.empty()) {
        res = zf::parse_graph_file(args.path, format_of(args));
    } else {
        throw std::runtime_error("no graph given: use --graph or --inline");
    }
    for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";
    return args.connectify ? zf::connectify(res.graph) : res.graph;
}

zf::VertexSet parse_filled(const std::string& ids, int n) {
    zf::VertexSet s(n);
    std::stringstream ss(ids);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::runtime_error("bad vertex id '" + tok + "'");
        if (v < 0 || v >= n)
            throw std::runtime_error("vertex id " + std::to_string(v) + " out of range");
        s.set(v);
    }
    return s;
}

std::vector<zf::Mode> modes_of(const std::string& mode) {
    if (mode == "both") return {zf::Mode::standard, zf::Mode::skew};
    return {zf::mode_from_name(mode)};
}

std::string join_ids(const std::vector<int>& ids) {
    if (ids.empty()) return "∅";
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

json failed_to_json(const zf::FailedResult& r) {
    json j;
    j["mode"] = zf::mode_name(r.mode);
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    j["witness"] = r.witness ? json(r.witness->members()) : json(nullptr);
    return j;
}

json certificate_to_json(const zf::ReductionCertificate& c) {
    json j;
    j["n"] = c.n;
    j["m"] = c.m;
    j["k"] = c.k;
    j["predicted"] = c.predicted;
    j["standard"] = c.standard_result.value ? json(*c.standard_result.value) : json(nullptr);
    j["skew"] = c.skew_result.value ? json(*c.skew_result.value) : json(nullptr);
    j["verdict"] = c.verdict;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand drivers ----

struct ClosureArgs {
    GraphArgs graph;
    std::string filled;
    std::string mode = "standard";
    bool as_json = false;
};

int run_closure(const ClosureArgs& a, bool report_stalled) {
    zf::Graph g = load_graph(a.graph);
    zf::VertexSet filled = parse_filled(a.filled, g.n());
    auto modes = modes_of(a.mode);

    json out;
    for (zf::Mode mode : modes) {
        if (report_stalled) {
            bool st = zf::is_stalled(g, filled, mode);
            if (a.as_json) out[zf::mode_name(mode)] = json{{"stalled", st}};
            else if (modes.size() > 1)
                std::cout << zf::mode_name(mode) << ": stalled=" << (st ? "true" : "false") << "\n";
            else
                std::cout << "stalled=" << (st ? "true" : "false") << "\n";
        } else {
            zf::VertexSet cl = zf::closure(g, filled, mode);
            bool forcing = cl.count() == g.n();
            if (a.as_json)
                out[zf::mode_name(mode)] =
                    json{{"closure", cl.members()}, {"forcing", forcing}};
            else if (modes.size() > 1)
                std::cout << zf::mode_name(mode) << ": " << join_ids(cl.members())
                          << " forcing=" << (forcing ? "true" : "false") << "\n";
            else
                std::cout << join_ids(cl.members())
                          << " forcing=" << (forcing ? "true" : "false") << "\n";
        }
    }
    if (a.as_json) emit(modes.size() > 1 ? out : out[zf::mode_name(modes[0])]);
    return 0;
}

struct FailedArgs {
    GraphArgs graph;
    std::string mode = "standard";
    int s = -1;
    uint64_t budget = zf::SearchOptions{}.budget;
    int threads = 0;
};

int run_failed(const FailedArgs& a) {
    zf::Graph g = load_graph(a.graph);
    zf::SearchOptions opts{a.budget, a.threads};
    auto modes = modes_of(a.mode);

    json out;
    for (zf::Mode mode : modes) {
        zf::FailedResult r = zf::failed_forcing_number(g, mode, opts);
        json j = failed_to_json(r);
        if (a.s >= 0) j["decision"] = r.value.has_value() && *r.value >= a.s;
        out[zf::mode_name(mode)] = j;
    }
    emit(modes.size() > 1 ? out : out[zf::mode_name(modes[0])]);
    return 0;
}

int run_decide(const FailedArgs& a) {
    zf::Graph g = load_graph(a.graph);
    zf::SearchOptions opts{a.budget, a.threads};
    auto modes = modes_of(a.mode);

    json out;
    for (zf::Mode mode : modes) {
        bool d = zf::decide_failed(g, a.s, mode, opts);
        out[zf::mode_name(mode)] = json{{"s", a.s}, {"decision", d}};
    }
    emit(modes.size() > 1 ? out : out[zf::mode_name(modes[0])]);
    return 0;
}

struct MisArgs {
    GraphArgs graph;
    int c = -1;
};

int run_mis(const MisArgs& a) {
    zf::Graph g = load_graph(a.graph);
    zf::MisResult r = zf::max_independent_set(g);
    json j;
    j["k"] = r.k;
    j["witness"] = r.witness.members();
    if (a.c >= 0) j["decision"] = r.k >= a.c;
    emit(j);
    return 0;
}

struct ReduceArgs {
    GraphArgs graph;
    std::string out;
    std::string labels;
};

json label_to_json(int id, const zf::GadgetLabel& l) {
    json j;
    j["id"] = id;
    switch (l.kind) {
    case zf::LabelKind::original:
        j["kind"] = "original";
        j["vertex"] = l.vertex;
        break;
    case zf::LabelKind::path:
        j["kind"] = "path";
        j["edge"] = l.edge;
        j["layer"] = l.layer;
        break;
    case zf::LabelKind::epsilon:
        j["kind"] = "epsilon";
        break;
    }
    return j;
}

int run_reduce(const ReduceArgs& a) {
    zf::Graph g = load_graph(a.graph);
    zf::ReducedGraph rg = zf::reduce(g);

    std::string labels_path = a.labels.empty() ? a.out + ".labels.json" : a.labels;
    {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        out << zf::serialize_graph(rg.graph, zf::GraphFormat::edgelist);
    }
    {
        json lab;
        lab["n_src"] = rg.n_src;
        lab["m_src"] = rg.m_src();
        lab["block_len"] = rg.block_len();
        lab["epsilon"] = rg.epsilon_id();
        lab["source_edges"] = json::array();
        for (auto [u, v] : rg.source_edges) lab["source_edges"].push_back({u, v});
        lab["vertices"] = json::array();
        for (int id = 0; id < rg.graph.n(); ++id)
            lab["vertices"].push_back(label_to_json(id, rg.labels[id]));
        std::ofstream out(labels_path);
        if (!out) throw std::runtime_error("cannot write " + labels_path);
        out << lab.dump(2) << "\n";
    }

    json j;
    j["vertices"] = rg.graph.n();
    j["edges"] = rg.graph.m();
    j["epsilon"] = rg.epsilon_id();
    j["graph_file"] = a.out;
    j["labels_file"] = labels_path;
    emit(j);
    return 0;
}

struct GenArgs {
    int n = 0;
    double p = 0.5;
    uint64_t seed = 0;
    std::string out;
    std::string format = "edgelist";
};

int run_gen(const GenArgs& a) {
    zf::Graph g = zf::random_connected_graph(a.n, a.p, a.seed);
    zf::GraphFormat fmt =
        a.format == "dimacs" ? zf::GraphFormat::dimacs : zf::GraphFormat::edgelist;
    std::string text = zf::serialize_graph(g, fmt);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot write " + a.out);
        out << text;
    }
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> files;
    std::string format = "edgelist";
    bool connectify = false;
    bool random = false;
    int exhaustive_n = 0;
    int count = 1;
    int n = 5;
    double p = 0.5;
    uint64_t seed = 0;
    bool oracle = false;
    int oracle_cap = 20;
    uint64_t budget = zf::VerifyOptions{}.budget;
    int threads = 0;
    bool deterministic = false;
};

int run_verify(const VerifyArgs& a) {
    std::vector<zf::VerifyInstance> corpus;
    if (a.exhaustive_n > 0) {
        corpus = zf::exhaustive_corpus(a.exhaustive_n);
    } else if (a.random) {
        corpus = zf::random_corpus(a.count, a.n, a.p, a.seed);
    } else if (!a.files.empty()) {
        zf::GraphFormat fmt =
            a.format == "dimacs" ? zf::GraphFormat::dimacs : zf::GraphFormat::edgelist;
        for (const std::string& path : a.files) {
            zf::ParseResult res = zf::parse_graph_file(path, fmt);
            for (const std::string& w : res.warnings)
                std::cerr << "warning: " << path << ": " << w << "\n";
            zf::Graph g = a.connectify ? zf::connectify(res.graph) : res.graph;
            if (!zf::is_connected(g))
                throw std::runtime_error(path + ": not connected (use --connectify)");
            corpus.push_back({path, g});
        }
    } else {
        throw std::runtime_error("no corpus: give files, --random, or --exhaustive-n");
    }

    zf::VerifyOptions opts;
    opts.oracle = a.oracle;
    opts.oracle_cap = a.oracle_cap;
    opts.budget = a.budget;
    opts.threads = a.threads;
    opts.with_timing = !a.deterministic;

    zf::VerifyReport report = zf::run_verify(corpus, opts);

    json j;
    j["instances"] = json::array();
    for (const zf::InstanceOutcome& out : report.outcomes) {
        json e;
        e["id"] = out.id;
        e["status"] = out.status;
        if (out.certificate) e["certificate"] = certificate_to_json(*out.certificate);
        if (out.oracle_ran) e["oracle_ok"] = out.oracle_ok;
        if (!out.note.empty()) e["note"] = out.note;
        if (opts.with_timing) e["elapsed_ms"] = out.elapsed_ms;
        j["instances"].push_back(e);
    }
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["skipped"] = report.skipped;
    j["total"] = report.total();
    emit(j);

    std::cerr << "passed " << report.passed << "/" << report.total() << "\n";
    return report.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for failed zero forcing and the independent-set reduction"};
    app.require_subcommand(1);

    ClosureArgs closure_args;
    auto* cmd_closure = app.add_subcommand("closure", "forcing closure of a filled set");
    add_graph_options(cmd_closure, closure_args.graph);
    cmd_closure->add_option("--filled", closure_args.filled, "comma-separated vertex ids");
    cmd_closure->add_option("--mode", closure_args.mode)
        ->check(CLI::IsMember({"standard", "skew", "both"}));
    cmd_closure->add_flag("--json", closure_args.as_json, "machine-readable output");

    ClosureArgs stalled_args;
    auto* cmd_stalled = app.add_subcommand("stalled", "is the filled set stalled?");
    add_graph_options(cmd_stalled, stalled_args.graph);
    cmd_stalled->add_option("--filled", stalled_args.filled, "comma-separated vertex ids");
    cmd_stalled->add_option("--mode", stalled_args.mode)
        ->check(CLI::IsMember({"standard", "skew", "both"}));
    cmd_stalled->add_flag("--json", stalled_args.as_json, "machine-readable output");

    FailedArgs failed_args;
    auto* cmd_failed = app.add_subcommand("failed", "failed (skew) forcing number");
    add_graph_options(cmd_failed, failed_args.graph);
    cmd_failed->add_option("--mode", failed_args.mode)
        ->check(CLI::IsMember({"standard", "skew", "both"}));
    cmd_failed->add_option("--s", failed_args.s, "also decide value >= s")
        ->check(CLI::NonNegativeNumber);
    cmd_failed->add_option("--budget", failed_args.budget, "subset check budget");
    cmd_failed->add_option("--threads", failed_args.threads, "0 = default");

    FailedArgs decide_args;
    auto* cmd_decide = app.add_subcommand("decide", "proper stalled subset of size >= s?");
    add_graph_options(cmd_decide, decide_args.graph);
    cmd_decide->add_option("--mode", decide_args.mode)
        ->check(CLI::IsMember({"standard", "skew", "both"}));
    cmd_decide->add_option("--s", decide_args.s, "threshold")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_decide->add_option("--budget", decide_args.budget, "subset check budget");
    cmd_decide->add_option("--threads", decide_args.threads, "0 = default");

    MisArgs mis_args;
    auto* cmd_mis = app.add_subcommand("mis", "maximum independent set");
    add_graph_options(cmd_mis, mis_args.graph);
    cmd_mis->add_option("--c", mis_args.c, "also decide k >= c")
        ->check(CLI::NonNegativeNumber);

    ReduceArgs reduce_args;
    auto* cmd_reduce = app.add_subcommand("reduce", "build the gadget graph");
    add_graph_options(cmd_reduce, reduce_args.graph, /*with_connectify=*/true);
    cmd_reduce->add_option("--out", reduce_args.out, "gadget edge-list output path")->required();
    cmd_reduce->add_option("--labels", reduce_args.labels,
                           "labeling sidecar path (default: OUT.labels.json)");

    GenArgs gen_args;
    auto* cmd_gen = app.add_subcommand("gen", "seeded random connected graph");
    cmd_gen->add_option("--n", gen_args.n, "vertex count")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_gen->add_option("--p", gen_args.p, "edge probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd_gen->add_option("--seed", gen_args.seed, "64-bit seed")->required();
    cmd_gen->add_option("--out", gen_args.out, "output path (default stdout)");
    cmd_gen->add_option("--format", gen_args.format)
        ->check(CLI::IsMember({"edgelist", "dimacs"}));

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "verify the reduction on a corpus");
    cmd_verify->add_option("files", verify_args.files, "graph files");
    cmd_verify->add_option("--format", verify_args.format)
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    cmd_verify->add_flag("--connectify", verify_args.connectify);
    cmd_verify->add_flag("--random", verify_args.random, "generate a random corpus");
    cmd_verify->add_option("--exhaustive-n", verify_args.exhaustive_n,
                           "all connected graphs up to isomorphism, 2..N vertices")
        ->check(CLI::Range(2, 6));
    cmd_verify->add_option("--count", verify_args.count, "random corpus size")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--n", verify_args.n, "random instance vertex count")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--p", verify_args.p, "random edge probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd_verify->add_option("--seed", verify_args.seed, "64-bit seed");
    cmd_verify->add_flag("--oracle", verify_args.oracle,
                         "cross-check source failed numbers against brute force");
    cmd_verify->add_option("--oracle-cap", verify_args.oracle_cap, "max n for the oracle");
    cmd_verify->add_option("--budget", verify_args.budget, "per-solve subset budget");
    cmd_verify->add_option("--threads", verify_args.threads, "0 = default");
    cmd_verify->add_flag("--deterministic", verify_args.deterministic,
                         "byte-reproducible output (no timings)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_closure->parsed()) return run_closure(closure_args, false);
        if (cmd_stalled->parsed()) return run_closure(stalled_args, true);
        if (cmd_failed->parsed()) return run_failed(failed_args);
        if (cmd_decide->parsed()) return run_decide(decide_args);
        if (cmd_mis->parsed()) return run_mis(mis_args);
        if (cmd_reduce->parsed()) return run_reduce(reduce_args);
        if (cmd_gen->parsed()) return run_gen(gen_args);
        if (cmd_verify->parsed()) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
