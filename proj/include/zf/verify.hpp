#ifndef ZF_VERIFY_HPP
#define ZF_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "zf/reduction.hpp"

namespace zf {

struct VerifyInstance {
    std::string id;
    Graph graph;
};

struct VerifyOptions {
    bool oracle = false;   // cross-check source failed numbers vs brute force
    int oracle_cap = 20;
    uint64_t budget = 1'000'000'000ULL;
    int threads = 0;
    bool with_timing = true; // off for byte-reproducible reports
};

struct InstanceOutcome {
    std::string id;
    std::string status; // "pass", "fail", "skip"
    std::optional<ReductionCertificate> certificate;
    bool oracle_ran = false;
    bool oracle_ok = true;
    std::string note;
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::vector<InstanceOutcome> outcomes;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    int total() const { return int(outcomes.size()); }
    bool ok() const { return failed == 0; }
};

// Connected graphs up to isomorphism with 2..max_n vertices.
std::vector<VerifyInstance> exhaustive_corpus(int max_n);

// Seeded connected G(n, p) instances; one sub-seed per instance.
std::vector<VerifyInstance> random_corpus(int count, int n, double p, uint64_t seed);

// Run verify_reduction over the corpus, in order. Budget overruns are
// per-instance skips; a false verdict or an oracle mismatch is a failure.
VerifyReport run_verify(const std::vector<VerifyInstance>& corpus, const VerifyOptions& opts);

} // namespace zf

#endif
