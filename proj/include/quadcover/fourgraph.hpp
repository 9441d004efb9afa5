#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadcover/quads.hpp"
#include "quadcover/util.hpp"

namespace quadcover::caen {

/// 4-graph on A (n vertices) and B (m vertices) whose edges are all
/// 4-subsets of A, all 4-subsets of B, and the mixed quadruples of e22.
/// The pure classes are implicit: only their counts are ever needed.
struct FourGraph {
    unsigned n = 0;
    unsigned m = 0;
    QuadSystem e22;

    std::uint64_t e40_count() const;
    std::uint64_t e04_count() const;
};

/// e22 = quads (i,j,p,q) with x_ip + x_iq + x_jp + x_jq even. Requires a
/// binary matrix with at least two rows and columns. Over Z_2 the parity
/// rule coincides with fairness, so e22 always equals quads_from_matrix(x).
FourGraph build_caen(const ZkMatrix& x);

/// An uncovered 5-set, as sorted combined vertex indices
/// (0..n-1 are A, n..n+m-1 are B).
struct Cover5Witness {
    std::vector<unsigned> vertices;
    bool operator==(const Cover5Witness&) const = default;
};

/// Absent iff every 5-subset of A union B contains an edge. Splits with at
/// least four vertices on one side are always covered by the implicit
/// classes; (3,2) and (2,3) splits need an e22 quad inside. Returns the
/// lexicographically first uncovered 5-set otherwise.
std::optional<Cover5Witness> verify_cover5_serial(const FourGraph& h);
std::optional<Cover5Witness> verify_cover5(const FourGraph& h, int workers = 1);

/// (C(n,4) + C(m,4) + |e22|) / C(n+m,4), exact.
Ratio caen_density(const FourGraph& h);

}  // namespace quadcover::caen
