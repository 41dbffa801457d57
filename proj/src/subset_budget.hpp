#ifndef ZF_SUBSET_BUDGET_HPP
#define ZF_SUBSET_BUDGET_HPP

#include <cstdint>

namespace zf::detail {

// C(n, k) saturated at cap. Exact while below cap: the running product
// r * (n-k+i) / i is an integer at every step.
inline uint64_t binom_capped(int n, int k, uint64_t cap) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        uint64_t num = uint64_t(n - k + i);
        if (r > cap / num) return cap;
        r = r * num / uint64_t(i);
        if (r > cap) return cap;
    }
    return r;
}

} // namespace zf::detail

#endif
