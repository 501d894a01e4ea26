#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "leamer/numerical_monoid.hpp"

namespace leamer {

// An element (x, n): the arithmetic run x, x+s, ..., x+ns inside the base
// monoid, with n >= 1; the identity is (0, 0).
struct Element {
    int64_t x = 0;
    int64_t n = 0;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;

    friend Element operator+(Element a, Element b) { return {a.x + b.x, a.n + b.n}; }
    friend Element operator-(Element a, Element b) { return {a.x - b.x, a.n - b.n}; }
    friend Element operator*(int64_t t, Element a) { return {t * a.x, t * a.n}; }
};

// Height of a column, or more generally any count that may be infinite.
struct ColumnHeight {
    static ColumnHeight finite(int64_t v) { return ColumnHeight{false, v}; }
    static ColumnHeight infinite() { return ColumnHeight{true, 0}; }

    bool is_infinite = false;
    int64_t value = 0; // meaningful only when finite

    friend bool operator==(const ColumnHeight&, const ColumnHeight&) = default;
};

enum class ColumnClass {
    PurelyIrreducible, // every element of the column is an atom
    Mixed,             // reducible band 2..b, atoms above it
    PurelyReducible,   // no atom beyond the trivial (x, 1)
};

inline const char* to_string(ColumnClass c) {
    switch (c) {
        case ColumnClass::PurelyIrreducible: return "purely-irreducible";
        case ColumnClass::Mixed: return "mixed";
        case ColumnClass::PurelyReducible: return "purely-reducible";
    }
    return "?";
}

struct ColumnProfile {
    int64_t x = 0;
    ColumnHeight height;
    // Largest h(y) + h(x-y) over two-column splits of x; empty if x has none.
    std::optional<ColumnHeight> split_bound;
    // Least n >= 2 such that (x, n) is an atom; empty if no such n.
    std::optional<int64_t> min_nontrivial_atom;
    ColumnClass cls = ColumnClass::PurelyReducible;
};

// The monoid of arithmetic runs of step s through a numerical monoid, for a
// step s outside the monoid.  Columns are indexed by the start value x; all
// structure (heights, split bounds, atom thresholds) is precomputed up to
// atom_bound(), past which every column is infinite and purely reducible.
class LeamerMonoid {
  public:
    static LeamerMonoid make(NumericalMonoid base, int64_t step);

    const NumericalMonoid& base() const { return base_; }
    int64_t step() const { return step_; }
    int64_t frobenius() const { return base_.frobenius(); }

    // Start of the first column (least x with (x,1) an element).
    int64_t x0() const { return x0_; }
    // Start of the first infinite column.
    int64_t xf() const { return xf_; }
    // Least n >= 2 with (xf, n) an atom.
    int64_t nf() const { return nf_; }
    // frobenius + x0: every atom (x, n) with n >= 2 has x <= atom_bound.
    int64_t atom_bound() const { return atom_bound_; }

    bool contains(int64_t x, int64_t n) const {
        if (x == 0 && n == 0) return true; // identity
        if (x < 1 || n < 1) return false;
        if (x > atom_bound_) return true; // infinite column
        int64_t h = height_[static_cast<std::size_t>(x)];
        return h == kInfinite || n <= h;
    }

    bool has_column(int64_t x) const {
        if (x < 1) return false;
        if (x > atom_bound_) return true;
        return height_[static_cast<std::size_t>(x)] > 0;
    }

    // Full profile of the column at x; empty if there is no column.
    std::optional<ColumnProfile> column(int64_t x) const;

    // Whether the element (x, n) is an atom.  Throws NotAnElement when (x, n)
    // is not in the monoid; the identity (0,0) is not an atom.
    bool is_atom(int64_t x, int64_t n) const;

    // All atoms with x <= x_max and n <= n_max, ordered by (x, n).
    std::vector<Element> atoms_in_window(int64_t x_max, int64_t n_max) const;

    // Largest column start carrying a nontrivial atom, if any column does.
    std::optional<int64_t> max_nontrivial_atom_column() const;

    // Least x whose column has (x, 2) as an atom, reported as that element.
    std::optional<Element> hw_witness() const;

  private:
    LeamerMonoid(NumericalMonoid base, int64_t step)
        : base_(std::move(base)), step_(step) {}

    static constexpr int64_t kInfinite = std::numeric_limits<int64_t>::max();

    // Height of column x computed directly from the base monoid.
    int64_t compute_height(int64_t x) const;

    NumericalMonoid base_;
    int64_t step_ = 0;
    int64_t x0_ = 0;
    int64_t xf_ = 0;
    int64_t nf_ = 0;
    int64_t atom_bound_ = 0;

    // All indexed by x in [0, atom_bound]:
    std::vector<int64_t> height_;    // 0 = no column, kInfinite = infinite
    std::vector<int64_t> split_max_; // 0 = no split, kInfinite = unbounded
    std::vector<int64_t> min_atom_;  // 0 = no nontrivial atom
    std::vector<ColumnClass> class_;
};

} // namespace leamer
