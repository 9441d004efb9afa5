#pragma once

#include <cstdint>
#include <optional>

namespace quadcover {

/// Outcome of an exhaustive or sampled fair-submatrix scan.
struct ScanResult {
    std::uint64_t checked = 0;
    /// Matrices with no fair 2x2 submatrix.
    std::uint64_t missing = 0;
    /// Smallest index (exhaustive: base-k encoding, entry t of the row-major
    /// layout is digit t; sampled: sample number) with no fair submatrix.
    std::optional<std::uint64_t> first_missing;

    bool operator==(const ScanResult&) const = default;
};

/// Scans all k^(rows*cols) matrices over Z_k for a fair 2x2 submatrix.
ScanResult scan_all_matrices_serial(unsigned k, unsigned rows, unsigned cols);
/// Same result for any worker count; the index range is partitioned.
ScanResult scan_all_matrices(unsigned k, unsigned rows, unsigned cols, int workers = 1);

/// Scans `samples` seeded random matrices; sample i is drawn from
/// mix_seed(seed, i), identical to random_matrix(rows, cols, k, mix_seed(seed, i)).
ScanResult scan_random_matrices_serial(unsigned k, unsigned rows, unsigned cols,
                                       std::uint64_t samples, std::uint64_t seed);
ScanResult scan_random_matrices(unsigned k, unsigned rows, unsigned cols,
                                std::uint64_t samples, std::uint64_t seed,
                                int workers = 1);

/// Number of fair 2x2 matrices over Z_k, by exhaustive enumeration of all
/// k^4 of them. Equals k^3: the fair condition pins one entry.
std::uint64_t count_fair_2x2(unsigned k);

}  // namespace quadcover
