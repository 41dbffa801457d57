#include "zf/verify.hpp"

#include <chrono>

#include "zf/enumerate.hpp"
#include "zf/random.hpp"

namespace zf {

std::vector<VerifyInstance> exhaustive_corpus(int max_n) {
    std::vector<VerifyInstance> corpus;
    for (int n = 2; n <= max_n; ++n) {
        auto reps = connected_graphs_upto_iso(n);
        for (size_t i = 0; i < reps.size(); ++i)
            corpus.push_back({"n" + std::to_string(n) + "-g" + std::to_string(i),
                              std::move(reps[i])});
    }
    return corpus;
}

std::vector<VerifyInstance> random_corpus(int count, int n, double p, uint64_t seed) {
    std::vector<VerifyInstance> corpus;
    SplitMix64 meta(seed);
    for (int i = 0; i < count; ++i)
        corpus.push_back(
            {"rnd-" + std::to_string(i), random_connected_graph(n, p, meta.next())});
    return corpus;
}

VerifyReport run_verify(const std::vector<VerifyInstance>& corpus, const VerifyOptions& opts) {
    VerifyReport report;
    SearchOptions search{opts.budget, opts.threads};

    for (const VerifyInstance& inst : corpus) {
        InstanceOutcome out;
        out.id = inst.id;
        auto t0 = std::chrono::steady_clock::now();
        try {
            out.certificate = verify_reduction(inst.graph, search);
            bool ok = out.certificate->verdict;

            if (opts.oracle && inst.graph.n() <= opts.oracle_cap) {
                out.oracle_ran = true;
                OracleOptions oracle{opts.oracle_cap};
                for (Mode mode : {Mode::standard, Mode::skew}) {
                    FailedResult fast = failed_forcing_number(inst.graph, mode, search);
                    FailedResult brute = failed_forcing_number_bruteforce(inst.graph, mode, oracle);
                    if (fast.value != brute.value) out.oracle_ok = false;
                }
                ok = ok && out.oracle_ok;
            }

            out.status = ok ? "pass" : "fail";
        } catch (const BudgetExceeded& e) {
            out.status = "skip";
            out.note = e.what();
        }
        if (opts.with_timing) {
            auto t1 = std::chrono::steady_clock::now();
            out.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }

        if (out.status == "pass") ++report.passed;
        else if (out.status == "fail") ++report.failed;
        else ++report.skipped;
        report.outcomes.push_back(std::move(out));
    }
    return report;
}

} // namespace zf
