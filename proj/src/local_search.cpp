#include "quadcover/local_search.hpp"

#include <stdexcept>

namespace quadcover {

namespace {

// Net change in the fair-quad count if entry (r, c) becomes v. Only quads
// using row r and column c are affected: fairness there reads
// x[r][c] + x[j][q] == x[r][q] + x[j][c] (mod k).
long long entry_delta(const ZkMatrix& x, unsigned r, unsigned c, std::uint8_t v) {
    const unsigned k = x.k();
    const unsigned old_v = x.at(r, c);
    long long delta = 0;
    for (unsigned j = 0; j < x.rows(); ++j) {
        if (j == r) continue;
        const unsigned xjc = x.at(j, c);
        for (unsigned q = 0; q < x.cols(); ++q) {
            if (q == c) continue;
            const unsigned rhs = (x.at(r, q) + xjc) % k;
            delta += int((v + x.at(j, q)) % k == rhs) - int((old_v + x.at(j, q)) % k == rhs);
        }
    }
    return delta;
}

}  // namespace

LocalSearchResult local_search_minimize(unsigned n, unsigned m, unsigned k,
                                        const ProfileSet& profiles, std::uint64_t seed,
                                        std::uint64_t max_evaluations) {
    const bool is_k2 = profiles == ProfileSet::family_k2(k);
    const bool is_k3 = k >= 3 && profiles == ProfileSet::family_k3(k);
    if (!is_k2 && !is_k3)
        throw std::invalid_argument(
            "local_search_minimize: profile set must be family_k2(k) or family_k3(k)");
    if (is_k3 && k % 2 != 0)
        throw std::invalid_argument(
            "local_search_minimize: family_k3 coverage is only guaranteed for even k");
    if (n < k + 1 || m < k + 1)
        throw std::invalid_argument("local_search_minimize: need n, m >= k+1");

    ZkMatrix x = random_matrix(n, m, k, seed);
    LocalSearchResult result{x, QuadSystem(n, m), 0, false};

    bool improved = true;
    bool budget_left = true;
    while (improved && budget_left) {
        improved = false;
        for (unsigned r = 0; r < n && budget_left; ++r) {
            for (unsigned c = 0; c < m && budget_left; ++c) {
                for (std::uint8_t v = 0; v < k; ++v) {
                    if (v == x.at(r, c)) continue;
                    if (result.evaluations >= max_evaluations) {
                        budget_left = false;
                        break;
                    }
                    ++result.evaluations;
                    if (entry_delta(x, r, c, v) < 0) {
                        x.set(r, c, v);
                        improved = true;
                        break;  // first improvement; move on to the next entry
                    }
                }
            }
        }
    }
    result.reached_local_minimum = !improved && budget_left;

    result.matrix = x;
    result.quads = quads_from_matrix_serial(x);
    const VerifyReport check = verify_profiles(result.quads, profiles);
    if (!check.pass)
        throw std::logic_error("local_search_minimize: coverage verification failed");
    return result;
}

}  // namespace quadcover
