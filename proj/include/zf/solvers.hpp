#ifndef ZF_SOLVERS_HPP
#define ZF_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf {

// Thrown when a search would exceed its configured subset budget. The
// budget is charged per complement-cardinality class before the class is
// scanned, so hitting it is independent of thread count and schedule.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    // Upper bound on complement subsets the search may charge for.
    uint64_t budget = 1'000'000'000ULL;
    // 0 = library default thread count.
    int threads = 0;
};

struct OracleOptions {
    // The brute force scans all 2^n subsets; refuse anything larger.
    int max_n = 20;
};

// Value of the failed (skew) forcing number plus a maximum stalled witness.
// value is empty ("undefined") only in skew mode, when no proper stalled
// subset exists at all; witness is then absent too.
struct FailedResult {
    Mode mode = Mode::standard;
    std::optional<int> value;
    std::optional<VertexSet> witness;
};

struct MisResult {
    int k = 0;
    VertexSet witness;
};

// Largest proper stalled subset, by scanning complements W of increasing
// cardinality and reporting S = V \ W for the first stalled hit. The
// witness is canonical: lexicographically smallest W (as an ascending id
// sequence) among minimum-cardinality stalled complements, independent of
// thread count. OpenMP-parallel across first-element prefixes.
FailedResult failed_forcing_number(const Graph& g, Mode mode, const SearchOptions& opts = {});

// Serial reference for the same contract: plain lexicographic enumeration
// with a from-scratch stalledness test per subset. Kept for testing and as
// the benchmark baseline.
FailedResult failed_forcing_number_serial(const Graph& g, Mode mode,
                                          const SearchOptions& opts = {});

// Independent oracle: largest non-forcing set over all 2^n subsets, with
// its own single-word closure routine. Equals the complement-search value
// (the closure of a maximum non-forcing set is that set itself).
FailedResult failed_forcing_number_bruteforce(const Graph& g, Mode mode,
                                              const OracleOptions& opts = {});

// Does a proper stalled subset of cardinality >= s exist? Stops the
// complement search at |W| = n - s.
bool decide_failed(const Graph& g, int s, Mode mode, const SearchOptions& opts = {});

// Exact maximum independent set by branch and bound; deterministic witness.
MisResult max_independent_set(const Graph& g);

} // namespace zf

#endif
