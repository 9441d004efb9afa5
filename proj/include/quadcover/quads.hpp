#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "quadcover/zk.hpp"

namespace quadcover {

/// Two row indices and two column indices, 0-based, i < j and p < q.
struct Quad {
    unsigned i = 0, j = 0, p = 0, q = 0;
    auto operator<=>(const Quad&) const = default;
};

/// Deduplicated system of quadruples over sides of size n (rows, set A)
/// and m (columns, set B), kept in lexicographic (i,j,p,q) order.
class QuadSystem {
public:
    QuadSystem(unsigned n, unsigned m, std::vector<Quad> quads = {});

    /// All C(n,2)*C(m,2) quadruples.
    static QuadSystem complete(unsigned n, unsigned m);

    unsigned n() const noexcept { return n_; }
    unsigned m() const noexcept { return m_; }
    const std::vector<Quad>& quads() const noexcept { return quads_; }
    std::size_t size() const noexcept { return quads_.size(); }
    bool contains(const Quad& q) const;

    /// Union of two systems over the same (n, m).
    QuadSystem merged(const QuadSystem& other) const;

    bool operator==(const QuadSystem&) const = default;

private:
    unsigned n_;
    unsigned m_;
    std::vector<Quad> quads_;
};

/// A demand (a, b), a >= 2 and b >= 2: every a-subset of A joined with
/// every b-subset of B must contain a chosen quadruple.
struct Profile {
    unsigned a;
    unsigned b;
    Profile(unsigned a, unsigned b);
    auto operator<=>(const Profile&) const = default;
};

enum class Family { k2, k3 };

/// Nonempty, deduplicated, ordered set of profiles.
class ProfileSet {
public:
    explicit ProfileSet(std::vector<Profile> profiles);

    /// {(2,k+1), (k+1,2)}
    static ProfileSet family_k2(unsigned k);
    /// {(2,k+1), (3,k), (k,3), (k+1,2)}
    static ProfileSet family_k3(unsigned k);

    const std::vector<Profile>& profiles() const noexcept { return profiles_; }
    bool operator==(const ProfileSet&) const = default;

private:
    std::vector<Profile> profiles_;
};

/// Lexicographically smallest (i,j,p,q) whose 2x2 submatrix is fair, if any.
/// Requires at least two rows and two columns.
std::optional<Quad> find_fair_submatrix(const ZkMatrix& m);

/// Every quad whose 2x2 submatrix of x is fair. Serial reference.
QuadSystem quads_from_matrix_serial(const ZkMatrix& x);
/// Same result, row pairs partitioned across OpenMP workers.
QuadSystem quads_from_matrix(const ZkMatrix& x, int workers = 1);

/// An uncovered (A-subset, B-subset) pair, both sorted ascending.
struct CoverWitness {
    std::vector<unsigned> a_set;
    std::vector<unsigned> b_set;
    bool operator==(const CoverWitness&) const = default;
};

/// Checks that every (a-subset, b-subset) pair contains a quad of q with
/// both row indices in the A-subset and both column indices in the B-subset.
/// Returns the lexicographically first uncovered pair, or absent when the
/// profile is covered. Enumeration is lexicographic over A-subsets, then
/// B-subsets, so the witness is unique.
std::optional<CoverWitness> covers_serial(const QuadSystem& q, const Profile& p);
/// Same witness for any worker count; A-subset ranks are partitioned.
std::optional<CoverWitness> covers(const QuadSystem& q, const Profile& p, int workers = 1);

struct VerifyEntry {
    Profile profile;
    std::optional<CoverWitness> witness;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    bool pass = true;
};

/// covers() for every profile in ps; pass iff all absent.
VerifyReport verify_profiles(const QuadSystem& q, const ProfileSet& ps, int workers = 1);

}  // namespace quadcover
