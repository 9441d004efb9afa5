#pragma once

#include <cstdint>
#include <vector>

namespace quadcover {

/// Residue modulus k >= 2. Entries are stored as bytes, which caps k at 255;
/// that is far beyond anything the search routines can reach anyway.
class Modulus {
public:
    explicit Modulus(unsigned k);
    unsigned k() const noexcept { return k_; }
    bool operator==(const Modulus&) const = default;

private:
    unsigned k_;
};

/// Row-major matrix over Z_k.
class ZkMatrix {
public:
    ZkMatrix(Modulus k, unsigned rows, unsigned cols, std::vector<std::uint8_t> entries);

    static ZkMatrix zeros(Modulus k, unsigned rows, unsigned cols);

    unsigned k() const noexcept { return k_.k(); }
    Modulus modulus() const noexcept { return k_; }
    unsigned rows() const noexcept { return rows_; }
    unsigned cols() const noexcept { return cols_; }
    std::uint8_t at(unsigned r, unsigned c) const {
        return entries_[std::size_t(r) * cols_ + c];
    }
    void set(unsigned r, unsigned c, std::uint8_t v);
    const std::vector<std::uint8_t>& entries() const noexcept { return entries_; }
    ZkMatrix transposed() const;

    bool operator==(const ZkMatrix&) const = default;

private:
    Modulus k_;
    unsigned rows_;
    unsigned cols_;
    std::vector<std::uint8_t> entries_;
};

/// x11 + x22 == x12 + x21 (mod k). The matrix must be exactly 2x2.
bool is_fair(const ZkMatrix& m);

/// Fairness of the 2x2 submatrix at rows i < j and columns p < q.
inline bool fair_at(const ZkMatrix& m, unsigned i, unsigned j, unsigned p, unsigned q) {
    const unsigned k = m.k();
    return (unsigned(m.at(i, p)) + m.at(j, q)) % k == (unsigned(m.at(i, q)) + m.at(j, p)) % k;
}

/// n x m matrix with i.i.d. uniform entries drawn row-major from
/// SplitMix64(seed). Same seed, same matrix.
ZkMatrix random_matrix(unsigned n, unsigned m, unsigned k, std::uint64_t seed);

}  // namespace quadcover
