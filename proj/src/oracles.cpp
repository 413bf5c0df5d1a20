#include "chowlab/oracles.hpp"

#include <vector>

namespace chowlab::oracles {

namespace {

struct BruteState {
    const Partition* lambda;
    const Partition* mu;
    const Partition* nu;
    std::vector<std::vector<int>> grid;
    std::vector<int> used;
    Int count = 0;
};

bool lattice_reading_word(const BruteState& s) {
    std::vector<int> seen(s.mu->length() + 2, 0);
    for (std::size_t r = 0; r < s.nu->length(); ++r)
        for (int c = s.nu->part(r) - 1; c >= s.lambda->part(r); --c) {
            const int v = s.grid[r][static_cast<std::size_t>(c)];
            ++seen[static_cast<std::size_t>(v)];
            if (v > 1 &&
                seen[static_cast<std::size_t>(v)] > seen[static_cast<std::size_t>(v) - 1])
                return false;
        }
    return true;
}

void fill_cells(BruteState& s, std::size_t r, int c) {
    if (r == s.nu->length()) {
        if (lattice_reading_word(s)) ++s.count;
        return;
    }
    if (c >= s.nu->part(r)) {
        fill_cells(s, r + 1, r + 1 < s.nu->length() ? s.lambda->part(r + 1) : 0);
        return;
    }
    for (int v = 1; v <= static_cast<int>(s.mu->length()); ++v) {
        if (s.used[static_cast<std::size_t>(v)] >= s.mu->part(static_cast<std::size_t>(v) - 1))
            continue;
        if (c > s.lambda->part(r) && s.grid[r][static_cast<std::size_t>(c) - 1] > v) continue;
        if (r > 0 && c >= s.lambda->part(r - 1) && c < s.nu->part(r - 1) &&
            s.grid[r - 1][static_cast<std::size_t>(c)] >= v)
            continue;
        s.grid[r][static_cast<std::size_t>(c)] = v;
        ++s.used[static_cast<std::size_t>(v)];
        fill_cells(s, r, c + 1);
        --s.used[static_cast<std::size_t>(v)];
        s.grid[r][static_cast<std::size_t>(c)] = 0;
    }
}

}  // namespace

Int lr_brute_force(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (!nu.contains(lambda)) return 0;
    if (mu.empty()) return 1;
    BruteState s;
    s.lambda = &lambda;
    s.mu = &mu;
    s.nu = &nu;
    s.grid.assign(nu.length(), {});
    for (std::size_t r = 0; r < nu.length(); ++r)
        s.grid[r].assign(static_cast<std::size_t>(nu.part(r)), 0);
    s.used.assign(mu.length() + 1, 0);
    fill_cells(s, 0, lambda.part(0));
    return s.count;
}

Int hilbert_scheme_euler(int chi, int n) {
    // Series coefficients of prod_{m=1..n} (1-q^m)^{-chi} up to q^n.
    std::vector<Int> series(static_cast<std::size_t>(n) + 1, 0);
    series[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // (1-q^m)^{-chi} = sum_k binom(chi-1+k, k) q^{mk}
        std::vector<Int> factor(static_cast<std::size_t>(n) + 1, 0);
        factor[0] = 1;
        Int binom = 1;
        for (int k = 1; m * k <= n; ++k) {
            binom = binom * (chi - 1 + k) / k;
            factor[static_cast<std::size_t>(m * k)] = binom;
        }
        std::vector<Int> next(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i <= n; ++i) {
            if (series[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= n; ++j)
                next[static_cast<std::size_t>(i + j)] +=
                    series[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(j)];
        }
        series = std::move(next);
    }
    return series[static_cast<std::size_t>(n)];
}

}  // namespace chowlab::oracles
