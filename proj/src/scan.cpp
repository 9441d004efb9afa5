#include "quadcover/scan.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quadcover/rng.hpp"

namespace quadcover {

namespace {

constexpr unsigned kMaxCells = 64;

// Fair-pair check on a small stack-resident matrix.
bool has_fair_submatrix(const std::uint8_t* e, unsigned rows, unsigned cols, unsigned k) {
    for (unsigned i = 0; i + 1 < rows; ++i)
        for (unsigned j = i + 1; j < rows; ++j)
            for (unsigned p = 0; p + 1 < cols; ++p)
                for (unsigned q = p + 1; q < cols; ++q) {
                    const unsigned lhs = (unsigned(e[i * cols + p]) + e[j * cols + q]) % k;
                    const unsigned rhs = (unsigned(e[i * cols + q]) + e[j * cols + p]) % k;
                    if (lhs == rhs) return true;
                }
    return false;
}

void decode(std::uint64_t index, unsigned k, unsigned cells, std::uint8_t* e) {
    for (unsigned t = 0; t < cells; ++t) {
        e[t] = static_cast<std::uint8_t>(index % k);
        index /= k;
    }
}

void fill_random(std::uint64_t sample_seed, unsigned k, unsigned cells, std::uint8_t* e) {
    SplitMix64 gen(sample_seed);
    for (unsigned t = 0; t < cells; ++t) e[t] = static_cast<std::uint8_t>(gen.below(k));
}

void check_dims(unsigned k, unsigned rows, unsigned cols) {
    if (k < 2) throw std::invalid_argument("scan: k must be at least 2");
    if (rows < 2 || cols < 2) throw std::invalid_argument("scan: need rows, cols >= 2");
    if (std::uint64_t(rows) * cols > kMaxCells)
        throw std::invalid_argument("scan: matrix too large");
}

std::uint64_t space_size(unsigned k, unsigned cells) {
    std::uint64_t total = 1;
    for (unsigned t = 0; t < cells; ++t) {
        if (total > UINT64_MAX / (4 * k))
            throw std::invalid_argument("scan: enumeration space exceeds 2^62");
        total *= k;
    }
    return total;
}

template <typename Fill>
ScanResult scan_range(std::uint64_t lo, std::uint64_t hi, unsigned k, unsigned rows,
                      unsigned cols, Fill fill) {
    ScanResult r;
    std::array<std::uint8_t, kMaxCells> e{};
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        fill(idx, e.data());
        ++r.checked;
        if (!has_fair_submatrix(e.data(), rows, cols, k)) {
            ++r.missing;
            if (!r.first_missing) r.first_missing = idx;
        }
    }
    return r;
}

template <typename Fill>
ScanResult scan_parallel(std::uint64_t total, unsigned k, unsigned rows, unsigned cols,
                         int workers, Fill fill) {
    ScanResult out;
    out.checked = total;
    std::uint64_t missing = 0;
    std::uint64_t first = UINT64_MAX;
#pragma omp parallel num_threads(workers) reduction(+ : missing) reduction(min : first)
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nth = omp_get_num_threads();
#else
        const int tid = 0;
        const int nth = 1;
#endif
        const std::uint64_t lo = total * std::uint64_t(tid) / nth;
        const std::uint64_t hi = total * (std::uint64_t(tid) + 1) / nth;
        const ScanResult local = scan_range(lo, hi, k, rows, cols, fill);
        missing += local.missing;
        if (local.first_missing) first = std::min(first, *local.first_missing);
    }
    out.missing = missing;
    if (first != UINT64_MAX) out.first_missing = first;
    return out;
}

}  // namespace

ScanResult scan_all_matrices_serial(unsigned k, unsigned rows, unsigned cols) {
    check_dims(k, rows, cols);
    const unsigned cells = rows * cols;
    const std::uint64_t total = space_size(k, cells);
    return scan_range(0, total, k, rows, cols,
                      [&](std::uint64_t idx, std::uint8_t* e) { decode(idx, k, cells, e); });
}

ScanResult scan_all_matrices(unsigned k, unsigned rows, unsigned cols, int workers) {
    if (workers <= 1) return scan_all_matrices_serial(k, rows, cols);
    check_dims(k, rows, cols);
    const unsigned cells = rows * cols;
    const std::uint64_t total = space_size(k, cells);
    return scan_parallel(total, k, rows, cols, workers,
                         [&](std::uint64_t idx, std::uint8_t* e) { decode(idx, k, cells, e); });
}

ScanResult scan_random_matrices_serial(unsigned k, unsigned rows, unsigned cols,
                                       std::uint64_t samples, std::uint64_t seed) {
    check_dims(k, rows, cols);
    const unsigned cells = rows * cols;
    return scan_range(0, samples, k, rows, cols, [&](std::uint64_t idx, std::uint8_t* e) {
        fill_random(mix_seed(seed, idx), k, cells, e);
    });
}

ScanResult scan_random_matrices(unsigned k, unsigned rows, unsigned cols, std::uint64_t samples,
                                std::uint64_t seed, int workers) {
    if (workers <= 1) return scan_random_matrices_serial(k, rows, cols, samples, seed);
    check_dims(k, rows, cols);
    const unsigned cells = rows * cols;
    return scan_parallel(samples, k, rows, cols, workers,
                         [&](std::uint64_t idx, std::uint8_t* e) {
                             fill_random(mix_seed(seed, idx), k, cells, e);
                         });
}

std::uint64_t count_fair_2x2(unsigned k) {
    if (k < 2) throw std::invalid_argument("count_fair_2x2: k must be at least 2");
    std::uint64_t fair = 0;
    for (unsigned a = 0; a < k; ++a)
        for (unsigned b = 0; b < k; ++b)
            for (unsigned c = 0; c < k; ++c)
                for (unsigned d = 0; d < k; ++d)
                    if ((a + d) % k == (b + c) % k) ++fair;
    return fair;
}

}  // namespace quadcover
