#pragma once

#include <cstdint>

#include "quadcover/quads.hpp"

namespace quadcover {

struct LocalSearchResult {
    ZkMatrix matrix;
    QuadSystem quads;
    std::uint64_t evaluations = 0;
    bool reached_local_minimum = false;
};

/// Starting from random_matrix(n, m, k, seed), repeatedly applies the first
/// single-entry change that strictly decreases the number of fair 2x2
/// submatrices. Entries are scanned in row-major order, candidate values in
/// increasing order; after an improving change the scan moves on to the next
/// entry, and the search stops at a full pass without improvement or when
/// max_evaluations candidate evaluations were spent.
///
/// Only the guaranteed-coverage families are accepted: family_k2(k) for any
/// k, family_k3(k) for even k. Coverage of the result is re-verified.
LocalSearchResult local_search_minimize(unsigned n, unsigned m, unsigned k,
                                        const ProfileSet& profiles,
                                        std::uint64_t seed,
                                        std::uint64_t max_evaluations);

}  // namespace quadcover
