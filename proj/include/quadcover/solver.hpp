#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "quadcover/quads.hpp"

namespace quadcover::solver {

/// One (A-subset, B-subset) demand instance; both sides sorted ascending.
struct BadSet {
    std::vector<unsigned> a_set;
    std::vector<unsigned> b_set;
    auto operator<=>(const BadSet&) const = default;
};

/// All (a-subset, b-subset) pairs over all profiles, lexicographically
/// ordered and deduplicated. Every profile must be feasible for (n, m).
std::vector<BadSet> enumerate_bad_sets(unsigned n, unsigned m, const ProfileSet& profiles);

/// Set-cover formulation: candidates are all C(n,2)*C(m,2) quads, elements
/// are the bad sets, and a quad covers the bad sets that contain it.
struct CoverInstance {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<BadSet> bad_sets;
    std::vector<Quad> candidates;                      ///< canonical order
    std::vector<std::vector<std::uint32_t>> coverers;  ///< bad set -> candidate ids
    std::vector<std::vector<std::uint32_t>> covered;   ///< candidate id -> bad sets

    static CoverInstance build(unsigned n, unsigned m, const ProfileSet& profiles);
};

struct MinCoverResult {
    std::uint64_t size = 0;
    QuadSystem system;
    bool exact = false;
    std::uint64_t nodes = 0;
};

/// Branch-and-bound exact minimum cover. Branches on the uncovered bad set
/// with the fewest covering candidates (ties by bad-set order), lower-bounds
/// by a greedy packing of bad sets with pairwise disjoint coverer lists.
/// Budget exhaustion returns the best cover found with exact == false.
/// On exact results the witness is the lexicographically least optimal
/// system, recovered by a deterministic re-search at the proven size.
MinCoverResult exact_min_cover(const CoverInstance& inst, std::uint64_t max_nodes = UINT64_MAX);

/// Counting bound: max over profiles (2,b) of C(n,2)*turan_t(m,b) and over
/// (a,2) of C(m,2)*turan_t(n,a); 0 when no profile has a side equal to 2.
std::uint64_t lower_bound_pairs(unsigned n, unsigned m, const ProfileSet& profiles);

}  // namespace quadcover::solver
