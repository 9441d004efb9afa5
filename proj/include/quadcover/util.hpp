#pragma once

#include <cstdint>
#include <vector>

namespace quadcover {

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binom(std::uint64_t n, std::uint64_t r);

/// Rank of the pair (i, j), i < j < n, in lexicographic order over all pairs.
constexpr std::uint64_t pair_rank(unsigned i, unsigned j, unsigned n) {
    return std::uint64_t(i) * (2u * n - i - 1) / 2 + (j - i - 1);
}

/// First a-subset of [0, n) in lexicographic order: {0, 1, ..., a-1}.
std::vector<unsigned> first_combination(unsigned a);

/// Advances c to the next a-subset of [0, n); false once exhausted.
bool next_combination(std::vector<unsigned>& c, unsigned n);

/// The a-subset of [0, n) with lexicographic rank r.
std::vector<unsigned> unrank_combination(std::uint64_t r, unsigned n, unsigned a);

/// Exact nonnegative rational, kept reduced.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    Ratio() = default;
    Ratio(std::uint64_t n, std::uint64_t d);
    double to_double() const { return double(num) / double(den); }
    bool operator==(const Ratio&) const = default;
};

/// Fixed-size bit vector used by the cover solver and the clique search.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const;
    bool none() const;
    bool all() const;

    Bits& operator&=(const Bits& o);
    Bits& operator|=(const Bits& o);
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    /// popcount(*this & o) without materializing the intersection.
    std::size_t count_and(const Bits& o) const;

    /// Smallest set index >= from, or size() if none.
    std::size_t next_set(std::size_t from) const;

    bool operator==(const Bits&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace quadcover
