#include "quadcover/util.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace quadcover {

std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;  // exact: product of i consecutive integers
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("binom: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<unsigned> first_combination(unsigned a) {
    std::vector<unsigned> c(a);
    std::iota(c.begin(), c.end(), 0u);
    return c;
}

bool next_combination(std::vector<unsigned>& c, unsigned n) {
    const unsigned a = static_cast<unsigned>(c.size());
    if (a == 0) return false;
    int i = static_cast<int>(a) - 1;
    while (i >= 0 && c[static_cast<unsigned>(i)] == n - a + static_cast<unsigned>(i)) --i;
    if (i < 0) return false;
    ++c[static_cast<unsigned>(i)];
    for (unsigned t = static_cast<unsigned>(i) + 1; t < a; ++t) c[t] = c[t - 1] + 1;
    return true;
}

std::vector<unsigned> unrank_combination(std::uint64_t r, unsigned n, unsigned a) {
    std::vector<unsigned> c;
    c.reserve(a);
    unsigned v = 0;
    for (unsigned slot = 0; slot < a; ++slot) {
        while (true) {
            const std::uint64_t block = binom(n - v - 1, a - slot - 1);
            if (r < block) {
                c.push_back(v);
                ++v;
                break;
            }
            r -= block;
            ++v;
        }
    }
    return c;
}

Ratio::Ratio(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

std::size_t Bits::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bits::none() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

bool Bits::all() const { return count() == size_; }

Bits& Bits::operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Bits& Bits::operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

std::size_t Bits::count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
}

std::size_t Bits::next_set(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t(0) << (from & 63));
    while (true) {
        if (cur) {
            const std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
            return i < size_ ? i : size_;
        }
        if (++w >= words_.size()) return size_;
        cur = words_[w];
    }
}

}  // namespace quadcover
