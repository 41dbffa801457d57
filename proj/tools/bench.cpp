// Benchmark: serial reference search vs the OpenMP kernel on gadget graphs
// and a random instance. Results are checked for agreement before timing is
// reported.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zf/random.hpp"
#include "zf/reduction.hpp"
#include "zf/solvers.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

zf::Graph complete_graph(int n) {
    zf::EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return zf::Graph(n, edges);
}

zf::Graph cycle_graph(int n) {
    zf::EdgeList edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return zf::Graph(n, edges);
}

zf::Graph complete_bipartite(int a, int b) {
    zf::EdgeList edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return zf::Graph(a + b, edges);
}

struct Case {
    std::string name;
    zf::Graph graph;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel failed-forcing search"};
    int threads = 0;
    int repeats = 1;
    bool heavy = false;
    uint64_t seed = 42;
    app.add_option("--threads", threads, "parallel kernel thread count (0 = default)");
    app.add_option("--repeats", repeats, "timing repetitions");
    app.add_flag("--heavy", heavy, "add a larger gadget instance");
    app.add_option("--seed", seed, "seed for the random instance");
    CLI11_PARSE(app, argc, argv);

    std::vector<Case> cases;
    cases.push_back({"gadget(K3)", zf::reduce(complete_graph(3)).graph});
    cases.push_back({"gadget(K4)", zf::reduce(complete_graph(4)).graph});
    cases.push_back({"gadget(C5)", zf::reduce(cycle_graph(5)).graph});
    // n=22 keeps the worst case (the full power set) comfortably bounded.
    cases.push_back({"random(n=22,p=0.2)", zf::random_connected_graph(22, 0.2, seed)});
    if (heavy) cases.push_back({"gadget(K3,3)", zf::reduce(complete_bipartite(3, 3)).graph});

    std::printf("%-22s %-9s %7s %12s %12s %9s\n", "instance", "mode", "value",
                "serial ms", "parallel ms", "speedup");

    for (const Case& c : cases) {
        for (zf::Mode mode : {zf::Mode::standard, zf::Mode::skew}) {
            zf::SearchOptions par_opts;
            par_opts.threads = threads;
            zf::FailedResult serial, parallel;

            double ms_serial = 0.0, ms_parallel = 0.0;
            for (int r = 0; r < repeats; ++r) {
                ms_serial +=
                    time_ms([&] { serial = zf::failed_forcing_number_serial(c.graph, mode); });
                ms_parallel += time_ms(
                    [&] { parallel = zf::failed_forcing_number(c.graph, mode, par_opts); });
            }
            ms_serial /= repeats;
            ms_parallel /= repeats;

            if (serial.value != parallel.value ||
                serial.witness.has_value() != parallel.witness.has_value() ||
                (serial.witness && *serial.witness != *parallel.witness)) {
                std::fprintf(stderr, "MISMATCH on %s (%s)\n", c.name.c_str(),
                             zf::mode_name(mode));
                return 1;
            }

            std::string value = serial.value ? std::to_string(*serial.value) : "undef";
            std::printf("%-22s %-9s %7s %12.2f %12.2f %8.2fx\n", c.name.c_str(),
                        zf::mode_name(mode), value.c_str(), ms_serial, ms_parallel,
                        ms_serial / ms_parallel);
        }
    }
    return 0;
}
