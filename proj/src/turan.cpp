#include "quadcover/turan.hpp"

#include <stdexcept>

#include "quadcover/util.hpp"

namespace quadcover {

std::uint64_t turan_t(unsigned n, unsigned s) {
    if (n < 1) throw std::invalid_argument("turan_t: n must be at least 1");
    if (s < 2) throw std::invalid_argument("turan_t: s must be at least 2");
    const std::uint64_t q = n / (s - 1);
    return q * n - q * (q + 1) / 2 * (s - 1);
}

EdgeSet turan_extremal_graph(unsigned n, unsigned s) {
    if (n < 1) throw std::invalid_argument("turan_extremal_graph: n must be at least 1");
    if (s < 2) throw std::invalid_argument("turan_extremal_graph: s must be at least 2");
    const unsigned parts = s - 1;
    const unsigned base = n / parts;
    const unsigned extra = n % parts;  // this many parts get base+1 vertices
    EdgeSet g;
    g.n = n;
    unsigned start = 0;
    for (unsigned part = 0; part < parts && start < n; ++part) {
        const unsigned size = base + (part < extra ? 1 : 0);
        for (unsigned i = start; i + 1 < start + size; ++i)
            for (unsigned j = i + 1; j < start + size; ++j) g.edges.emplace_back(i, j);
        start += size;
    }
    return g;
}

QuadSystem product_construction(unsigned n, unsigned m, const Profile& profile) {
    if (n < profile.a || m < profile.b)
        throw std::invalid_argument("product_construction: profile infeasible for (n, m)");
    const EdgeSet ea = turan_extremal_graph(n, profile.a);
    const EdgeSet eb = turan_extremal_graph(m, profile.b);
    std::vector<Quad> qs;
    qs.reserve(ea.edges.size() * eb.edges.size());
    for (const auto& [i, j] : ea.edges)
        for (const auto& [p, q] : eb.edges) qs.push_back({i, j, p, q});
    return QuadSystem(n, m, std::move(qs));
}

}  // namespace quadcover
