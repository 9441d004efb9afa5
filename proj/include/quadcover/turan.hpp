#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quadcover/quads.hpp"

namespace quadcover {

/// Simple graph on vertices [0, n) as an explicit, lexicographically
/// sorted edge list (i < j, no duplicates).
struct EdgeSet {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;
    bool operator==(const EdgeSet&) const = default;
};

/// Minimum number of edges of an n-vertex graph with independence number
/// below s, by the closed formula q*n - q*(q+1)/2*(s-1) with q = n/(s-1)
/// rounded down. At integer points both admissible roundings agree.
std::uint64_t turan_t(unsigned n, unsigned s);

/// A graph attaining turan_t(n, s): s-1 disjoint cliques whose sizes
/// differ by at most one, larger cliques first, vertices consecutive.
EdgeSet turan_extremal_graph(unsigned n, unsigned s);

/// { e_A x e_B : e_A edge of turan_extremal_graph(n, a),
///               e_B edge of turan_extremal_graph(m, b) }.
/// Size is exactly turan_t(n,a)*turan_t(m,b) and the system covers the
/// profile. Requires n >= a and m >= b.
QuadSystem product_construction(unsigned n, unsigned m, const Profile& profile);

}  // namespace quadcover
