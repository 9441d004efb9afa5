#include "quadcover/quads.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quadcover/util.hpp"

namespace quadcover {

namespace {

// (i, j) with i < j < n at lexicographic rank r.
std::pair<unsigned, unsigned> unrank_pair(std::uint64_t r, unsigned n) {
    unsigned i = 0;
    while (r >= n - 1 - i) {
        r -= n - 1 - i;
        ++i;
    }
    return {i, i + 1 + static_cast<unsigned>(r)};
}

// Flat membership table keyed by (A-pair rank, B-pair rank).
struct QuadLookup {
    unsigned n, m;
    std::uint64_t pairs_b;
    std::vector<std::uint8_t> flags;

    explicit QuadLookup(const QuadSystem& q)
        : n(q.n()), m(q.m()), pairs_b(binom(m, 2)), flags(binom(n, 2) * pairs_b, 0) {
        for (const Quad& quad : q.quads())
            flags[pair_rank(quad.i, quad.j, n) * pairs_b + pair_rank(quad.p, quad.q, m)] = 1;
    }

    bool has(unsigned i, unsigned j, unsigned p, unsigned qq) const {
        return flags[pair_rank(i, j, n) * pairs_b + pair_rank(p, qq, m)] != 0;
    }

    bool pair_covered(const std::vector<unsigned>& a_set, const std::vector<unsigned>& b_set) const {
        for (std::size_t x = 0; x + 1 < a_set.size(); ++x)
            for (std::size_t y = x + 1; y < a_set.size(); ++y)
                for (std::size_t u = 0; u + 1 < b_set.size(); ++u)
                    for (std::size_t v = u + 1; v < b_set.size(); ++v)
                        if (has(a_set[x], a_set[y], b_set[u], b_set[v])) return true;
        return false;
    }
};

void check_feasible(const QuadSystem& q, const Profile& p) {
    if (p.a > q.n() || p.b > q.m())
        throw std::invalid_argument("covers: profile (" + std::to_string(p.a) + "," +
                                    std::to_string(p.b) + ") infeasible for n=" +
                                    std::to_string(q.n()) + ", m=" + std::to_string(q.m()));
}

}  // namespace

QuadSystem::QuadSystem(unsigned n, unsigned m, std::vector<Quad> quads)
    : n_(n), m_(m), quads_(std::move(quads)) {
    for (const Quad& q : quads_)
        if (!(q.i < q.j && q.j < n_ && q.p < q.q && q.q < m_))
            throw std::invalid_argument("QuadSystem: quad indices out of range");
    std::sort(quads_.begin(), quads_.end());
    quads_.erase(std::unique(quads_.begin(), quads_.end()), quads_.end());
}

QuadSystem QuadSystem::complete(unsigned n, unsigned m) {
    std::vector<Quad> qs;
    for (unsigned i = 0; i + 1 < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            for (unsigned p = 0; p + 1 < m; ++p)
                for (unsigned q = p + 1; q < m; ++q) qs.push_back({i, j, p, q});
    return QuadSystem(n, m, std::move(qs));
}

bool QuadSystem::contains(const Quad& q) const {
    return std::binary_search(quads_.begin(), quads_.end(), q);
}

QuadSystem QuadSystem::merged(const QuadSystem& other) const {
    if (n_ != other.n_ || m_ != other.m_)
        throw std::invalid_argument("QuadSystem::merged: mismatched sides");
    std::vector<Quad> all = quads_;
    all.insert(all.end(), other.quads_.begin(), other.quads_.end());
    return QuadSystem(n_, m_, std::move(all));
}

Profile::Profile(unsigned a_, unsigned b_) : a(a_), b(b_) {
    if (a < 2 || b < 2) throw std::invalid_argument("Profile: both sides must be at least 2");
}

ProfileSet::ProfileSet(std::vector<Profile> profiles) : profiles_(std::move(profiles)) {
    if (profiles_.empty()) throw std::invalid_argument("ProfileSet: must be nonempty");
    std::sort(profiles_.begin(), profiles_.end());
    profiles_.erase(std::unique(profiles_.begin(), profiles_.end()), profiles_.end());
}

ProfileSet ProfileSet::family_k2(unsigned k) {
    if (k < 2) throw std::invalid_argument("family_k2: k must be at least 2");
    return ProfileSet({Profile(2, k + 1), Profile(k + 1, 2)});
}

ProfileSet ProfileSet::family_k3(unsigned k) {
    if (k < 3) throw std::invalid_argument("family_k3: k must be at least 3");
    return ProfileSet({Profile(2, k + 1), Profile(3, k), Profile(k, 3), Profile(k + 1, 2)});
}

std::optional<Quad> find_fair_submatrix(const ZkMatrix& m) {
    if (m.rows() < 2 || m.cols() < 2)
        throw std::invalid_argument("find_fair_submatrix: need at least 2 rows and 2 columns");
    for (unsigned i = 0; i + 1 < m.rows(); ++i)
        for (unsigned j = i + 1; j < m.rows(); ++j)
            for (unsigned p = 0; p + 1 < m.cols(); ++p)
                for (unsigned q = p + 1; q < m.cols(); ++q)
                    if (fair_at(m, i, j, p, q)) return Quad{i, j, p, q};
    return std::nullopt;
}

QuadSystem quads_from_matrix_serial(const ZkMatrix& x) {
    if (x.rows() < 2 || x.cols() < 2)
        throw std::invalid_argument("quads_from_matrix: need at least 2 rows and 2 columns");
    std::vector<Quad> qs;
    for (unsigned i = 0; i + 1 < x.rows(); ++i)
        for (unsigned j = i + 1; j < x.rows(); ++j)
            for (unsigned p = 0; p + 1 < x.cols(); ++p)
                for (unsigned q = p + 1; q < x.cols(); ++q)
                    if (fair_at(x, i, j, p, q)) qs.push_back({i, j, p, q});
    return QuadSystem(x.rows(), x.cols(), std::move(qs));
}

QuadSystem quads_from_matrix(const ZkMatrix& x, int workers) {
    if (workers <= 1) return quads_from_matrix_serial(x);
    if (x.rows() < 2 || x.cols() < 2)
        throw std::invalid_argument("quads_from_matrix: need at least 2 rows and 2 columns");
    const std::uint64_t pairs_a = binom(x.rows(), 2);
    std::vector<std::vector<Quad>> per_pair(pairs_a);
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long r = 0; r < static_cast<long long>(pairs_a); ++r) {
        const auto [i, j] = unrank_pair(static_cast<std::uint64_t>(r), x.rows());
        auto& out = per_pair[static_cast<std::size_t>(r)];
        for (unsigned p = 0; p + 1 < x.cols(); ++p)
            for (unsigned q = p + 1; q < x.cols(); ++q)
                if (fair_at(x, i, j, p, q)) out.push_back({i, j, p, q});
    }
    std::vector<Quad> qs;
    for (auto& chunk : per_pair) qs.insert(qs.end(), chunk.begin(), chunk.end());
    return QuadSystem(x.rows(), x.cols(), std::move(qs));
}

std::optional<CoverWitness> covers_serial(const QuadSystem& q, const Profile& p) {
    check_feasible(q, p);
    const QuadLookup lookup(q);
    std::vector<unsigned> a_set = first_combination(p.a);
    do {
        std::vector<unsigned> b_set = first_combination(p.b);
        do {
            if (!lookup.pair_covered(a_set, b_set)) return CoverWitness{a_set, b_set};
        } while (next_combination(b_set, q.m()));
    } while (next_combination(a_set, q.n()));
    return std::nullopt;
}

std::optional<CoverWitness> covers(const QuadSystem& q, const Profile& p, int workers) {
    if (workers <= 1) return covers_serial(q, p);
    check_feasible(q, p);
    const QuadLookup lookup(q);
    const std::uint64_t total_a = binom(q.n(), p.a);

    struct Hit {
        std::uint64_t rank_a = UINT64_MAX;
        std::uint64_t rank_b = UINT64_MAX;
        CoverWitness w;
    };
    std::vector<Hit> hits;
    std::atomic<std::uint64_t> best_a{UINT64_MAX};

#pragma omp parallel num_threads(workers)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nth = omp_get_num_threads();
#else
        const int tid = 0;
        const int nth = 1;
#endif
        const std::uint64_t lo = total_a * static_cast<std::uint64_t>(tid) / nth;
        const std::uint64_t hi = total_a * (static_cast<std::uint64_t>(tid) + 1) / nth;
        Hit local;
        if (lo < hi) {
            std::vector<unsigned> a_set = unrank_combination(lo, q.n(), p.a);
            for (std::uint64_t ra = lo; ra < hi; ++ra) {
                if (ra > best_a.load(std::memory_order_relaxed)) break;
                std::vector<unsigned> b_set = first_combination(p.b);
                std::uint64_t rb = 0;
                do {
                    if (!lookup.pair_covered(a_set, b_set)) {
                        local = Hit{ra, rb, CoverWitness{a_set, b_set}};
                        break;
                    }
                    ++rb;
                } while (next_combination(b_set, q.m()));
                if (local.rank_a != UINT64_MAX) {
                    std::uint64_t seen = best_a.load(std::memory_order_relaxed);
                    while (seen > ra && !best_a.compare_exchange_weak(seen, ra)) {
                    }
                    break;
                }
                next_combination(a_set, q.n());
            }
        }
#pragma omp critical
        hits.push_back(std::move(local));
    }

    const Hit* best = nullptr;
    for (const Hit& h : hits) {
        if (h.rank_a == UINT64_MAX) continue;
        if (!best || h.rank_a < best->rank_a ||
            (h.rank_a == best->rank_a && h.rank_b < best->rank_b))
            best = &h;
    }
    if (!best) return std::nullopt;
    return best->w;
}

VerifyReport verify_profiles(const QuadSystem& q, const ProfileSet& ps, int workers) {
    VerifyReport report;
    for (const Profile& p : ps.profiles()) {
        auto w = covers(q, p, workers);
        if (w) report.pass = false;
        report.entries.push_back({p, std::move(w)});
    }
    return report;
}

}  // namespace quadcover
