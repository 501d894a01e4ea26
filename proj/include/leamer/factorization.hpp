#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leamer/leamer_monoid.hpp"
#include "leamer/rational.hpp"
#include "leamer/region_scan.hpp"

namespace leamer {

// One factorization into atoms, stored as (atom, multiplicity) pairs with
// atoms in ascending (x, n) order.
struct Factorization {
    std::vector<std::pair<Element, int64_t>> parts;

    int64_t length() const {
        int64_t total = 0;
        for (const auto& [atom, mult] : parts) total += mult;
        return total;
    }

    Element total() const {
        Element sum;
        for (const auto& [atom, mult] : parts) sum = sum + mult * atom;
        return sum;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// All factorizations of (x, n) into atoms, in a deterministic order.  The
// identity has exactly the empty factorization.  Throws NotAnElement for
// non-elements and OverCap if more than `cap` factorizations exist.
std::vector<Factorization> factorizations(
    const LeamerMonoid& s, Element e,
    std::optional<std::uint64_t> cap = std::nullopt);

// max(|f|, |g|) minus the length of the common part.  Throws ElementMismatch
// unless both factor the same element.
int64_t distance(const Factorization& f, const Factorization& g);

// Least bound N such that any two factorizations of (x, n) are linked by a
// chain of factorizations with successive distances at most N; equivalently
// the largest edge on a minimax spanning tree of the complete distance graph.
// 0 when at most one factorization exists.
int64_t catenary_of(const LeamerMonoid& s, Element e,
                    std::optional<std::uint64_t> cap = std::nullopt);

struct LengthSummary {
    Element element;
    std::vector<int64_t> lengths; // sorted ascending
    int64_t min_length = 0;
    int64_t max_length = 0;
    Rational elasticity{1};           // max_length / min_length
    std::vector<int64_t> delta;       // distinct successive gaps, sorted
};

// Factorization length sets computed by the region dynamic program, never by
// enumeration.  Queries grow an internal cached rectangle on demand.
class LengthOracle {
  public:
    explicit LengthOracle(const LeamerMonoid& s) : s_(&s) {}

    // Sorted distinct factorization lengths of a nonzero element.
    std::vector<int64_t> lengths(Element e);

    LengthSummary summary(Element e);

    Rational elasticity(Element e);

  private:
    void ensure(int64_t x, int64_t n);
    const std::uint64_t* cell(int64_t x, int64_t n) const {
        return &bits_[(static_cast<std::size_t>(x) *
                           (static_cast<std::size_t>(cached_n_) + 1) +
                       static_cast<std::size_t>(n)) *
                      words_];
    }

    const LeamerMonoid* s_;
    int64_t cached_x_ = 0;
    int64_t cached_n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace leamer
