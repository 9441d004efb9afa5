#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadcover/quads.hpp"
#include "quadcover/util.hpp"

namespace quadcover::solver {

struct BoundsConfig {
    std::vector<std::uint64_t> seeds = {1};
    std::uint64_t solver_budget_nodes = 50'000'000;
    std::uint64_t local_search_budget = 200'000;
    /// Exact search runs only below these instance sizes.
    std::uint64_t exact_candidate_cap = 400;
    std::uint64_t exact_bad_set_cap = 5000;
    int workers = 1;
};

struct BoundsReport {
    unsigned n = 0, m = 0, k = 0;
    Family family = Family::k2;
    std::uint64_t lower_bound = 0;
    /// Size of the union of the per-profile product constructions.
    std::uint64_t product_upper = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<std::uint64_t> random_sizes;  ///< aligned with seeds
    std::uint64_t local_best = 0;
    /// Smallest construction seen (random, local search, or product union).
    std::uint64_t best_constructed = 0;
    std::optional<std::uint64_t> exact;
    /// n^2 m^2 / (4k), the density reference the sampled sizes approach.
    Ratio density_reference;
    double wall_ms_total = 0.0;
    double wall_ms_exact = 0.0;
};

/// Assembles the counting lower bound, the product upper bound, sampled
/// random-construction sizes, the best local-search size, and (on instances
/// under the configured caps) the exact minimum. family k3 requires even k.
BoundsReport bounds_report(unsigned n, unsigned m, unsigned k, Family family,
                           const BoundsConfig& cfg = {});

}  // namespace quadcover::solver
