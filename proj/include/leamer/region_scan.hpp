#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "leamer/leamer_monoid.hpp"

namespace leamer {

// Read-only view of one element's set of factorization lengths, stored one
// bit per length (bit index = length).
class LengthSetView {
  public:
    LengthSetView(const std::uint64_t* words, std::size_t n_words)
        : words_(words), n_words_(n_words) {}

    const std::uint64_t* words() const { return words_; }
    std::size_t word_count() const { return n_words_; }

    bool empty() const {
        for (std::size_t w = 0; w < n_words_; ++w)
            if (words_[w]) return false;
        return true;
    }

    bool test(int64_t length) const {
        if (length < 0 || static_cast<std::size_t>(length) >= 64 * n_words_)
            return false;
        return (words_[static_cast<std::size_t>(length) / 64] >>
                (static_cast<std::size_t>(length) % 64)) &
               1u;
    }

    // Least / greatest length present; -1 when empty.
    int64_t min() const;
    int64_t max() const;

    // Largest difference between successive lengths; 0 with fewer than two.
    int64_t max_gap() const;

    std::vector<int64_t> to_vector() const;

  private:
    const std::uint64_t* words_;
    std::size_t n_words_;
};

// Computes the complete factorization length set of every element (x, n) with
// 1 <= x <= x_max and 1 <= n <= n_max, bottom layer up, invoking
// visit(x, n, lengths) once per element in deterministic (n, x) order.
//
// The recursion peels one atom off each factorization: the length set of
// (x, n) is the union, over atoms (z, q) with an element (or zero) remainder,
// of 1 + lengths(x-z, n-q).  Three atom families keep each cell cheap:
// trivial atoms in columns past the Frobenius number collapse into a running
// prefix-union over x of the layer below; atoms of unbounded height in a
// fixed column collapse into a per-column prefix-union over n; everything
// else (columns at or below the Frobenius number, finite atom ranges) is a
// short explicit loop.
void scan_lengths(const LeamerMonoid& s, int64_t x_max, int64_t n_max,
                  const std::function<void(int64_t x, int64_t n,
                                           const LengthSetView&)>& visit);

} // namespace leamer
