// Acceptance gate: one pass/fail line per release-blocking behavior.
// Exit code 0 only when every line passes.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "util.hpp"
#include "zf/enumerate.hpp"
#include "zf/forcing.hpp"
#include "zf/random.hpp"
#include "zf/reduction.hpp"
#include "zf/solvers.hpp"
#include "zf/verify.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
    namespace fs = std::filesystem;
    static int counter = 0;
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "zf_acceptance";
        fs::create_directories(d);
        return d;
    }();
    fs::path out = dir / ("out" + std::to_string(counter++));
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" + ZF_CLI_PATH + "\" " + args +
                      " >" + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

// Visit every t-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(int n, int t, F visit) {
    std::vector<int> c(t);
    for (int i = 0; i < t; ++i) c[i] = i;
    while (true) {
        visit(c);
        int i = t - 1;
        while (i >= 0 && c[i] == n - t + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
    }
}

// --- criteria ---

bool exhaustive_small_sources(std::string& detail) {
    zf::VerifyOptions opts;
    opts.with_timing = false;
    zf::VerifyReport report = zf::run_verify(zf::exhaustive_corpus(4), opts);
    detail = std::to_string(report.passed) + "/" + std::to_string(report.total()) +
             " verdicts true";
    return report.total() == 9 && report.passed == 9;
}

bool seeded_sparse_sources(std::string& detail) {
    zf::SplitMix64 meta(1002);
    int verified = 0, attempts = 0;
    while (verified < 20) {
        if (++attempts > 2000) {
            detail = "generator never produced enough sparse connected instances";
            return false;
        }
        zf::Graph g = zf::random_connected_graph(5, 0.5, meta.next());
        if (g.m() > 7) continue;
        zf::ReductionCertificate cert = zf::verify_reduction(g);
        if (!cert.verdict) {
            detail = "false verdict on instance " + std::to_string(verified) +
                     " (m=" + std::to_string(g.m()) + ", k=" + std::to_string(cert.k) + ")";
            return false;
        }
        ++verified;
    }
    detail = "20/20 verdicts true";
    return true;
}

bool solver_matches_brute_force(std::string& detail) {
    long comparisons = 0;
    for (int n = 1; n <= 5; ++n)
        for (const zf::Graph& g : zf::all_connected_graphs(n))
            for (zf::Mode mode : {zf::Mode::standard, zf::Mode::skew}) {
                zf::FailedResult fast = zf::failed_forcing_number(g, mode);
                zf::FailedResult ref = zf::failed_forcing_number_serial(g, mode);
                zf::FailedResult brute = zf::failed_forcing_number_bruteforce(g, mode);
                if (fast.value != brute.value || fast.value != ref.value ||
                    fast.witness != ref.witness) {
                    detail = "mismatch on a connected labeled graph, n=" + std::to_string(n);
                    return false;
                }
                if (fast.value &&
                    (!zf::is_stalled(g, *fast.witness, mode) ||
                     fast.witness->count() != *fast.value)) {
                    detail = "bad witness on a connected labeled graph, n=" + std::to_string(n);
                    return false;
                }
                ++comparisons;
            }

    zf::SplitMix64 meta(1003);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + int(meta.next() % 9);
        zf::Graph g = zf::random_graph(n, 0.35, meta.next());
        for (zf::Mode mode : {zf::Mode::standard, zf::Mode::skew}) {
            zf::FailedResult fast = zf::failed_forcing_number(g, mode);
            zf::FailedResult brute = zf::failed_forcing_number_bruteforce(g, mode);
            if (fast.value != brute.value) {
                detail = "mismatch on seeded instance " + std::to_string(i) +
                         " (n=" + std::to_string(n) + ")";
                return false;
            }
            ++comparisons;
        }
    }
    detail = std::to_string(comparisons) + " value comparisons, both modes, incl. undefined";
    return true;
}

bool frozen_family_values(std::string& detail) {
    for (int n = 2; n <= 8; ++n) {
        zf::Graph kn = zft::complete_graph(n);
        zf::FailedResult r = zf::failed_forcing_number(kn, zf::Mode::standard);
        zf::FailedResult b = zf::failed_forcing_number_bruteforce(kn, zf::Mode::standard);
        if (!(r.value && *r.value == n - 2 && b.value == r.value)) {
            detail = "complete graph on " + std::to_string(n) + " vertices";
            return false;
        }
    }
    zf::Graph k2 = zft::complete_graph(2);
    if (zf::failed_forcing_number(k2, zf::Mode::skew).value ||
        zf::failed_forcing_number_bruteforce(k2, zf::Mode::skew).value) {
        detail = "the two-vertex clique should have no stalled proper subset (skew)";
        return false;
    }
    zf::Graph p3 = zft::path_graph(3);
    for (zf::Mode mode : {zf::Mode::standard, zf::Mode::skew}) {
        zf::FailedResult r = zf::failed_forcing_number(p3, mode);
        zf::FailedResult b = zf::failed_forcing_number_bruteforce(p3, mode);
        if (!(r.value == 1 && b.value == 1)) {
            detail = "path on three vertices";
            return false;
        }
    }
    detail = "cliques n=2..8 give n-2; smallest undefined skew case; three-vertex path";
    return true;
}

bool gadget_structure(std::string& detail) {
    std::vector<zf::Graph> sources = {zft::complete_graph(2), zft::path_graph(3),
                                      zft::complete_graph(3)};
    long stalled_seen = 0, witnesses = 0;
    for (const zf::Graph& src : sources) {
        zf::ReducedGraph rg = zf::reduce(src);
        int N = rg.graph.n();

        // Every proper stalled subset reachable by removing up to n_src+1
        // vertices satisfies the structural consequences.
        bool ok = true;
        for (int t = 1; t <= rg.n_src + 1 && ok; ++t) {
            for_each_combination(N, t, [&](const std::vector<int>& w) {
                if (!ok) return;
                zf::VertexSet s = zf::VertexSet::full(N);
                for (int x : w) s.reset(x);
                if (!zf::is_stalled(rg.graph, s, zf::Mode::standard)) return;
                ++stalled_seen;
                if (!zf::stalled_paths_complete(rg, s)) ok = false;
                zf::StalledStructureReport rep = zf::check_stalled_structure(rg, s);
                if (rep.hypothesis_applies && !rep.all_hold()) ok = false;
            });
        }
        if (!ok) {
            detail = "structural consequence failed (source n=" + std::to_string(rg.n_src) + ")";
            return false;
        }

        // Every independent set of the source yields a witness that is
        // stalled in both modes.
        for (unsigned mask = 0; mask < (1u << src.n()); ++mask) {
            zf::VertexSet ind = zft::from_mask(src.n(), mask);
            bool independent = true;
            for (auto [u, v] : src.edges())
                if (ind.test(u) && ind.test(v)) { independent = false; break; }
            if (!independent) continue;
            zf::VertexSet w = zf::build_witness(rg, ind);
            if (!zf::is_stalled(rg.graph, w, zf::Mode::skew) ||
                !zf::is_stalled(rg.graph, w, zf::Mode::standard) || w.count() >= N) {
                detail = "witness from an independent set is not stalled";
                return false;
            }
            ++witnesses;
        }
    }

    // Full proper-subset scan of the smallest gadget.
    zf::ReducedGraph rg2 = zf::reduce(zft::complete_graph(2));
    for (unsigned mask = 0; mask < 255u; ++mask) {
        zf::VertexSet s = zft::from_mask(8, mask);
        if (!zf::is_stalled(rg2.graph, s, zf::Mode::standard)) continue;
        ++stalled_seen;
        if (!zf::stalled_paths_complete(rg2, s)) {
            detail = "incomplete path block in a stalled subset of the smallest gadget";
            return false;
        }
        zf::StalledStructureReport rep = zf::check_stalled_structure(rg2, s);
        if (rep.hypothesis_applies && !rep.all_hold()) {
            detail = "structure report failed on the smallest gadget";
            return false;
        }
    }

    detail = std::to_string(stalled_seen) + " stalled subsets and " +
             std::to_string(witnesses) + " independent-set witnesses checked";
    return true;
}

bool closure_laws(std::string& detail) {
    zf::SplitMix64 meta(1006);
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + int(meta.next() % 12);
        double p = meta.next_unit();
        zf::Graph g = zf::random_graph(n, p, meta.next());
        zf::VertexSet s = zf::random_subset(n, meta);
        zf::Mode mode = (meta.next() & 1) ? zf::Mode::skew : zf::Mode::standard;
        std::string tag = " (instance " + std::to_string(i) + ")";

        zf::VertexSet cl = zf::closure(g, s, mode);
        if (!s.subset_of(cl)) { detail = "closure not extensive" + tag; return false; }
        if (!(zf::closure(g, cl, mode) == cl)) {
            detail = "closure not idempotent" + tag;
            return false;
        }
        if (!zf::is_stalled(g, cl, mode)) { detail = "closure not stalled" + tag; return false; }
        zf::VertexSet t = s | zf::random_subset(n, meta);
        if (!cl.subset_of(zf::closure(g, t, mode))) {
            detail = "closure not monotone" + tag;
            return false;
        }
        if (!zf::closure(g, s, zf::Mode::standard).subset_of(zf::closure(g, s, zf::Mode::skew))) {
            detail = "standard closure escapes the skew closure" + tag;
            return false;
        }
        if (zf::is_stalled(g, s, zf::Mode::skew) && !zf::is_stalled(g, s, zf::Mode::standard)) {
            detail = "skew-stalled set not stalled" + tag;
            return false;
        }
        for (zf::Mode m2 : {zf::Mode::standard, zf::Mode::skew})
            if (zf::is_stalled(g, s, m2) != zf::forced_vertices(g, s, m2).none()) {
                detail = "stalledness disagrees with the one-round force set" + tag;
                return false;
            }
    }
    detail = "1000 seeded instances up to n=12, all laws hold";
    return true;
}

bool deterministic_across_threads(std::string& detail) {
    const std::string args = "verify --random --count 5 --n 4 --seed 7 --deterministic";
    CliRun a = run_cli(args);
    CliRun b = run_cli(args);
    if (a.code != 0 || a.out.empty()) { detail = "verify run failed"; return false; }
    if (a.out != b.out) { detail = "repeat runs differ byte-for-byte"; return false; }
    CliRun c = run_cli(args, "OMP_NUM_THREADS=1");
    CliRun d = run_cli(args, "OMP_NUM_THREADS=4");
    if (c.out != d.out || c.out != a.out) {
        detail = "thread count changed the report";
        return false;
    }

    zf::SplitMix64 meta(1007);
    for (int i = 0; i < 10; ++i) {
        int n = 5 + int(meta.next() % 6);
        zf::Graph g = zf::random_graph(n, 0.3, meta.next());
        for (zf::Mode mode : {zf::Mode::standard, zf::Mode::skew}) {
            zf::SearchOptions one, four;
            one.threads = 1;
            four.threads = 4;
            zf::FailedResult x = zf::failed_forcing_number(g, mode, one);
            zf::FailedResult y = zf::failed_forcing_number(g, mode, four);
            if (x.value != y.value || x.witness != y.witness) {
                detail = "canonical witness depends on the thread count";
                return false;
            }
        }
    }
    detail = "byte-identical reports; identical canonical witnesses at 1 and 4 threads";
    return true;
}

struct Criterion {
    std::string name;
    double limit_s; // 0 = no wall-clock bound
    std::function<bool(std::string&)> body;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"gadget values equal (2n+1)m+k on every connected source up to iso, n<=4", 60.0,
         exhaustive_small_sources},
        {"gadget values equal (2n+1)m+k on 20 seeded connected sources (n=5, m<=7)", 600.0,
         seeded_sparse_sources},
        {"solver matches brute force on 772 labeled + 200 seeded instances", 300.0,
         solver_matches_brute_force},
        {"frozen family values confirmed by brute force", 0.0, frozen_family_values},
        {"structural consequences hold on every checked gadget stalled subset", 0.0,
         gadget_structure},
        {"closure laws hold on 1000 seeded instances", 0.0, closure_laws},
        {"reports and witnesses identical across thread counts", 0.0,
         deterministic_across_threads},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && c.limit_s > 0.0 && secs > c.limit_s) {
            ok = false;
            detail += "; exceeded the " + std::to_string(int(c.limit_s)) + "s bound";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << ": " << detail << " ["
                  << std::fixed << std::setprecision(1) << secs << "s]\n";
        if (!ok) ++failures;
    }

    std::cout << (int(criteria.size()) - failures) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
