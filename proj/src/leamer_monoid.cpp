#include "leamer/leamer_monoid.hpp"

#include <algorithm>
#include <string>

namespace leamer {

int64_t LeamerMonoid::compute_height(int64_t x) const {
    if (!base_.contains(x) || !base_.contains(x + step_)) return 0;
    const int64_t frobenius = base_.frobenius();
    for (int64_t n = 1;; ++n) {
        // Everything past the Frobenius number is a member, so once the run
        // crosses it the column extends forever.
        if (x + n * step_ > frobenius) return kInfinite;
        if (!base_.contains(x + (n + 1) * step_)) return n;
    }
}

LeamerMonoid LeamerMonoid::make(NumericalMonoid base, int64_t step) {
    if (step <= 0)
        fail(ErrorCode::NonPositiveStep,
             "step " + std::to_string(step) + " is not positive");
    if (base.contains(step))
        fail(ErrorCode::StepInMonoid,
             "step " + std::to_string(step) +
                 " lies in the monoid; runs would never leave it");

    LeamerMonoid s(std::move(base), step);
    const int64_t frobenius = s.base_.frobenius();

    // First column: x = frobenius+1 always works, so the scan terminates.
    int64_t x0 = 1;
    while (s.compute_height(x0) == 0) ++x0;
    s.x0_ = x0;
    s.atom_bound_ = frobenius + x0;

    const std::size_t size = static_cast<std::size_t>(s.atom_bound_) + 1;
    s.height_.assign(size, 0);
    for (int64_t x = x0; x <= s.atom_bound_; ++x)
        s.height_[static_cast<std::size_t>(x)] = s.compute_height(x);

    s.xf_ = 0;
    for (int64_t x = x0; x <= frobenius + 1; ++x) {
        if (s.height_[static_cast<std::size_t>(x)] == kInfinite) {
            s.xf_ = x;
            break;
        }
    }

    // Largest two-part height sum per column; infinity is absorbing.
    s.split_max_.assign(size, 0);
    for (int64_t x = x0; x <= s.atom_bound_; ++x) {
        if (s.height_[static_cast<std::size_t>(x)] == 0) continue;
        int64_t best = 0;
        for (int64_t y = x0; y <= x - x0; ++y) {
            int64_t hy = s.height_[static_cast<std::size_t>(y)];
            int64_t hz = s.height_[static_cast<std::size_t>(x - y)];
            if (hy == 0 || hz == 0) continue;
            if (hy == kInfinite || hz == kInfinite) {
                best = kInfinite;
                break;
            }
            best = std::max(best, hy + hz);
        }
        s.split_max_[static_cast<std::size_t>(x)] = best;
    }

    // Reducible heights in a column are exactly 2..min(split_max, height), so
    // the least nontrivial atom and the column class read off directly.
    s.min_atom_.assign(size, 0);
    s.class_.assign(size, ColumnClass::PurelyReducible);
    for (int64_t x = x0; x <= s.atom_bound_; ++x) {
        const int64_t h = s.height_[static_cast<std::size_t>(x)];
        if (h == 0) continue;
        const int64_t m = s.split_max_[static_cast<std::size_t>(x)];
        int64_t min_atom = 0;
        if (h == 1) {
            min_atom = 0; // nothing above the trivial atom
        } else if (m == 0) {
            min_atom = 2; // no splits at all
        } else if (m == kInfinite) {
            min_atom = 0; // every n >= 2 splits
        } else if (h == kInfinite || m < h) {
            min_atom = m + 1;
        } else {
            min_atom = 0; // reducible band swallows the whole column
        }
        s.min_atom_[static_cast<std::size_t>(x)] = min_atom;

        ColumnClass cls;
        if (h == 1 || min_atom == 2)
            cls = ColumnClass::PurelyIrreducible;
        else if (min_atom == 0)
            cls = ColumnClass::PurelyReducible;
        else
            cls = ColumnClass::Mixed;
        s.class_[static_cast<std::size_t>(x)] = cls;
    }

    // The first infinite column splits only through finite columns, so its
    // split bound is finite and a least nontrivial atom always exists there.
    s.nf_ = s.min_atom_[static_cast<std::size_t>(s.xf_)];

    return s;
}

std::optional<ColumnProfile> LeamerMonoid::column(int64_t x) const {
    if (!has_column(x)) return std::nullopt;
    ColumnProfile p;
    p.x = x;
    if (x > atom_bound_) {
        // Beyond the atom bound: infinite column, split through (x0, .) and
        // the infinite column at x - x0, no nontrivial atoms.
        p.height = ColumnHeight::infinite();
        p.split_bound = ColumnHeight::infinite();
        p.min_nontrivial_atom = std::nullopt;
        p.cls = ColumnClass::PurelyReducible;
        return p;
    }
    const int64_t h = height_[static_cast<std::size_t>(x)];
    const int64_t m = split_max_[static_cast<std::size_t>(x)];
    const int64_t a = min_atom_[static_cast<std::size_t>(x)];
    p.height = (h == kInfinite) ? ColumnHeight::infinite() : ColumnHeight::finite(h);
    if (m == 0)
        p.split_bound = std::nullopt;
    else
        p.split_bound = (m == kInfinite) ? ColumnHeight::infinite() : ColumnHeight::finite(m);
    p.min_nontrivial_atom = (a == 0) ? std::nullopt : std::optional<int64_t>(a);
    p.cls = class_[static_cast<std::size_t>(x)];
    return p;
}

bool LeamerMonoid::is_atom(int64_t x, int64_t n) const {
    if (!contains(x, n))
        fail(ErrorCode::NotAnElement,
             "(" + std::to_string(x) + ", " + std::to_string(n) +
                 ") is not an element");
    if (x == 0 && n == 0) return false; // identity
    if (n == 1) return true;
    if (x > atom_bound_) return false;
    const int64_t a = min_atom_[static_cast<std::size_t>(x)];
    return a != 0 && n >= a;
}

std::vector<Element> LeamerMonoid::atoms_in_window(int64_t x_max, int64_t n_max) const {
    std::vector<Element> atoms;
    if (x_max < 1 || n_max < 1) return atoms;
    for (int64_t x = x0_; x <= x_max; ++x) {
        if (!has_column(x)) continue;
        atoms.push_back(Element{x, 1});
        if (x > atom_bound_ || n_max < 2) continue;
        const int64_t a = min_atom_[static_cast<std::size_t>(x)];
        if (a == 0) continue;
        const int64_t h = height_[static_cast<std::size_t>(x)];
        const int64_t top = (h == kInfinite) ? n_max : std::min(h, n_max);
        for (int64_t n = a; n <= top; ++n) atoms.push_back(Element{x, n});
    }
    return atoms;
}

std::optional<int64_t> LeamerMonoid::max_nontrivial_atom_column() const {
    for (int64_t x = atom_bound_; x >= x0_; --x)
        if (min_atom_[static_cast<std::size_t>(x)] != 0) return x;
    return std::nullopt;
}

std::optional<Element> LeamerMonoid::hw_witness() const {
    for (int64_t x = x0_; x <= atom_bound_; ++x)
        if (min_atom_[static_cast<std::size_t>(x)] == 2) return Element{x, 2};
    return std::nullopt;
}

} // namespace leamer
