#pragma once

#include <cstdint>
#include <vector>

#include "leamer/errors.hpp"

namespace leamer {

using std::int64_t;

// A numerical monoid: the set of nonnegative integer combinations of a finite
// set of positive generators with gcd 1.  Construction computes a membership
// table out to a bound past the Frobenius number, the Frobenius number itself,
// and the minimal generating set (supplied generators that are not a sum of
// two nonzero members).
class NumericalMonoid {
  public:
    // Validates and canonicalizes the generators, then builds the tables.
    // Throws Error on: empty input, a generator <= 0, gcd != 1, or generators
    // so large the membership table would be unreasonable.
    static NumericalMonoid make(std::vector<int64_t> raw_generators);

    // Minimal generating set, sorted ascending.
    const std::vector<int64_t>& generators() const { return generators_; }

    // Smallest nonzero member (= smallest minimal generator).
    int64_t multiplicity() const { return generators_.front(); }

    // Largest integer not in the monoid; -1 when the monoid is all of N.
    int64_t frobenius() const { return frobenius_; }

    // Membership test for any integer (negative values are never members).
    bool contains(int64_t x) const {
        if (x < 0) return false;
        if (x >= static_cast<int64_t>(table_.size())) return true;
        return table_[static_cast<std::size_t>(x)];
    }

    // Least member in each residue class mod m, indexed by residue 0..m-1.
    // m must be a nonzero member of the monoid.
    std::vector<int64_t> apery_set(int64_t m) const;

    // Raw membership table (index = value).  Covers at least frobenius()+1
    // entries; every integer beyond the table is a member.
    const std::vector<bool>& membership_table() const { return table_; }

  private:
    NumericalMonoid() = default;

    std::vector<int64_t> generators_;
    int64_t frobenius_ = -1;
    std::vector<bool> table_;
};

} // namespace leamer
