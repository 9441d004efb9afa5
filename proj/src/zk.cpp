#include "quadcover/zk.hpp"

#include <stdexcept>
#include <string>

#include "quadcover/rng.hpp"

namespace quadcover {

Modulus::Modulus(unsigned k) : k_(k) {
    if (k < 2) throw std::invalid_argument("Modulus: k must be at least 2");
    if (k > 255) throw std::invalid_argument("Modulus: k above 255 is not supported");
}

ZkMatrix::ZkMatrix(Modulus k, unsigned rows, unsigned cols, std::vector<std::uint8_t> entries)
    : k_(k), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("ZkMatrix: dimensions must be positive");
    if (entries_.size() != std::size_t(rows_) * cols_)
        throw std::invalid_argument("ZkMatrix: entry count does not match dimensions");
    for (std::uint8_t e : entries_)
        if (e >= k_.k())
            throw std::invalid_argument("ZkMatrix: entry " + std::to_string(e) +
                                        " out of range for k=" + std::to_string(k_.k()));
}

ZkMatrix ZkMatrix::zeros(Modulus k, unsigned rows, unsigned cols) {
    return ZkMatrix(k, rows, cols, std::vector<std::uint8_t>(std::size_t(rows) * cols, 0));
}

void ZkMatrix::set(unsigned r, unsigned c, std::uint8_t v) {
    if (v >= k_.k()) throw std::invalid_argument("ZkMatrix::set: value out of range");
    entries_[std::size_t(r) * cols_ + c] = v;
}

ZkMatrix ZkMatrix::transposed() const {
    std::vector<std::uint8_t> t(entries_.size());
    for (unsigned r = 0; r < rows_; ++r)
        for (unsigned c = 0; c < cols_; ++c) t[std::size_t(c) * rows_ + r] = at(r, c);
    return ZkMatrix(k_, cols_, rows_, std::move(t));
}

bool is_fair(const ZkMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("is_fair: matrix must be 2x2");
    return fair_at(m, 0, 1, 0, 1);
}

ZkMatrix random_matrix(unsigned n, unsigned m, unsigned k, std::uint64_t seed) {
    if (n < 2 || m < 2) throw std::invalid_argument("random_matrix: need n >= 2 and m >= 2");
    Modulus mod(k);
    SplitMix64 gen(seed);
    std::vector<std::uint8_t> e(std::size_t(n) * m);
    for (auto& v : e) v = static_cast<std::uint8_t>(gen.below(k));
    return ZkMatrix(mod, n, m, std::move(e));
}

}  // namespace quadcover
