#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "quadcover/zk.hpp"

namespace quadcover::gk {

/// A function Z_k -> Z_k as its length-k value vector; a vertex of G_k.
/// Two vertices are adjacent when their difference is a bijection.
class FnVec {
public:
    FnVec(Modulus k, std::vector<std::uint8_t> values);

    static FnVec zero(Modulus k);
    static FnVec identity(Modulus k);
    /// j -> coeff * j (mod k)
    static FnVec linear(Modulus k, unsigned coeff);

    unsigned k() const noexcept { return k_.k(); }
    Modulus modulus() const noexcept { return k_; }
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }
    std::uint8_t operator()(unsigned j) const { return values_[j]; }

    bool operator==(const FnVec& o) const { return values_ == o.values_; }
    /// Lexicographic on value vectors (meaningful for equal k).
    bool operator<(const FnVec& o) const { return values_ < o.values_; }

private:
    Modulus k_;
    std::vector<std::uint8_t> values_;
};

/// True iff the k differences (f(j) - g(j)) mod k are pairwise distinct.
bool is_edge(const FnVec& f, const FnVec& g);

unsigned smallest_prime_factor(unsigned k);

/// The p(k) linear functions j -> i*j for i < p(k); pairwise adjacent.
std::vector<FnVec> canonical_clique(unsigned k);

/// Stacks the functions as rows of a |fs| x k matrix. The matrix has no
/// fair 2x2 submatrix exactly when the functions are pairwise adjacent.
ZkMatrix matrix_from_functions(const std::vector<FnVec>& fs);

struct CliqueResult {
    unsigned size = 0;
    std::vector<FnVec> witness;  ///< sorted, pairwise adjacent, |witness| == size
    bool exact = false;          ///< true: size is the clique number of G_k
};

/// Resumable frontier of the clique search. Everything except the
/// orthomorphism list itself is stored; the list is rebuilt
/// deterministically on resume. Serialized by the checkpoint format.
struct CliqueSearchState {
    unsigned k = 0;
    bool enum_done = false;      ///< orthomorphism enumeration completed
    std::uint64_t ortho_count = 0;
    std::uint64_t next_branch = 0;  ///< first unexplored top-level branch
    bool search_done = false;
    unsigned best_size = 0;
    std::vector<std::vector<std::uint8_t>> best_witness;  ///< value vectors
    std::uint64_t nodes_used = 0;  ///< cumulative across sessions
};

struct CliqueLimits {
    std::uint64_t max_nodes = UINT64_MAX;  ///< search nodes per session
    std::uint64_t ortho_cap = 2'000'000;   ///< materialization cap
    std::uint64_t adjacency_cap = 40'000;  ///< max list size for the exact pass
};

/// Maximum clique of G_k, symmetry-reduced: every clique translates to one
/// containing the zero function, and a domain permutation then maps a second
/// member to the identity, so the search runs over the bijections sigma with
/// sigma - identity bijective. Seeded by canonical_clique, hence the result
/// is never below p(k). Budget exhaustion returns the best clique found with
/// exact == false; pass a state to checkpoint and resume. on_branch_done is
/// invoked after each completed top-level branch.
CliqueResult max_clique(unsigned k, const CliqueLimits& limits = {}, int workers = 1,
                        CliqueSearchState* state = nullptr,
                        const std::function<void(const CliqueSearchState&)>& on_branch_done = {});

/// Adjacent pairs among the k! bijections (the neighborhood of the zero
/// function). Feasible for k <= 10; guarded beyond that.
std::uint64_t count_adjacent_bijection_pairs_serial(unsigned k);
std::uint64_t count_adjacent_bijection_pairs(unsigned k, int workers = 1);

/// Exact triangle count of G_k: k^k * E_N / 3, where E_N is the number of
/// adjacent pairs among the neighbors of zero (valid by vertex transitivity
/// under translation). Capped at k <= 5; larger k is refused.
std::uint64_t count_triangles(unsigned k, int workers = 1);

}  // namespace quadcover::gk
