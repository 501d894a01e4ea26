#include "leamer/region_scan.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace leamer {

int64_t LengthSetView::min() const {
    for (std::size_t w = 0; w < n_words_; ++w)
        if (words_[w])
            return static_cast<int64_t>(64 * w) + std::countr_zero(words_[w]);
    return -1;
}

int64_t LengthSetView::max() const {
    for (std::size_t w = n_words_; w-- > 0;)
        if (words_[w])
            return static_cast<int64_t>(64 * w) + 63 - std::countl_zero(words_[w]);
    return -1;
}

int64_t LengthSetView::max_gap() const {
    int64_t prev = -1, gap = 0;
    for (std::size_t w = 0; w < n_words_; ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            int64_t len = static_cast<int64_t>(64 * w) + std::countr_zero(word);
            if (prev >= 0) gap = std::max(gap, len - prev);
            prev = len;
            word &= word - 1;
        }
    }
    return gap;
}

std::vector<int64_t> LengthSetView::to_vector() const {
    std::vector<int64_t> out;
    for (std::size_t w = 0; w < n_words_; ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            out.push_back(static_cast<int64_t>(64 * w) + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

namespace {

struct AtomColumn {
    int64_t x = 0;
    int64_t min_atom = 0;
    int64_t height = 0; // finite ranges only
};

inline void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i) dst[i] |= src[i];
}

} // namespace

void scan_lengths(const LeamerMonoid& s, int64_t x_max, int64_t n_max,
                  const std::function<void(int64_t, int64_t,
                                           const LengthSetView&)>& visit) {
    if (x_max < 1 || n_max < 1) return;
    const int64_t X = x_max;
    const int64_t N = n_max;
    // Lengths never exceed the total height N.
    const std::size_t W = static_cast<std::size_t>((N + 2 + 63) / 64);
    const int64_t frobenius = s.frobenius();

    // Column census over the scan range.
    std::vector<int64_t> low_cols;             // columns at or below Frobenius
    std::vector<AtomColumn> finite_atoms;      // finite columns carrying atoms
    std::vector<AtomColumn> unbounded_atoms;   // infinite columns carrying atoms
    int64_t ring_depth = 2;
    for (int64_t x = 1; x <= X; ++x) {
        auto c = s.column(x);
        if (!c) continue;
        if (x <= frobenius) low_cols.push_back(x);
        if (!c->min_nontrivial_atom) continue;
        if (c->height.is_infinite) {
            unbounded_atoms.push_back({x, *c->min_nontrivial_atom, 0});
            ring_depth = std::max(ring_depth, *c->min_nontrivial_atom + 1);
        } else {
            finite_atoms.push_back({x, *c->min_nontrivial_atom, c->height.value});
            ring_depth = std::max(ring_depth, c->height.value + 1);
        }
    }

    const std::size_t stride = (static_cast<std::size_t>(X) + 1) * W;
    // Rolling window of recent layers; layer n lives at slot n % ring_depth.
    std::vector<std::uint64_t> ring(static_cast<std::size_t>(ring_depth) * stride, 0);
    auto layer = [&](int64_t n, int64_t x) {
        return &ring[static_cast<std::size_t>(n % ring_depth) * stride +
                     static_cast<std::size_t>(x) * W];
    };
    // Prefix-union over x of the previous layer (for trivial atoms past F).
    std::vector<std::uint64_t> px(stride, 0);
    // Per unbounded-atom column: union of layers 1..n-min_atom, updated lazily.
    std::vector<std::uint64_t> vz(unbounded_atoms.size() * stride, 0);
    std::vector<std::uint64_t> acc(W, 0);

    for (int64_t n = 1; n <= N; ++n) {
        if (n >= 2) {
            // Advance each unbounded-atom prefix to cover layer n - min_atom.
            for (std::size_t c = 0; c < unbounded_atoms.size(); ++c) {
                const int64_t lag = n - unbounded_atoms[c].min_atom;
                if (lag < 1) continue;
                std::uint64_t* base = &vz[c * stride];
                for (int64_t x = 1; x <= X; ++x)
                    or_into(base + static_cast<std::size_t>(x) * W, layer(lag, x), W);
            }
            // Prefix-union over x of layer n-1.
            std::fill(px.begin(), px.begin() + static_cast<std::ptrdiff_t>(W), 0);
            for (int64_t x = 1; x <= X; ++x) {
                std::uint64_t* here = &px[static_cast<std::size_t>(x) * W];
                const std::uint64_t* left = &px[static_cast<std::size_t>(x - 1) * W];
                for (std::size_t i = 0; i < W; ++i) here[i] = left[i];
                or_into(here, layer(n - 1, x), W);
            }
        }

        for (int64_t x = 1; x <= X; ++x) {
            std::uint64_t* out = layer(n, x);
            std::fill(out, out + W, 0);
            if (!s.contains(x, n)) continue;

            if (n == 1) {
                out[0] = 2; // bit 1: the single-atom factorization
                visit(x, 1, LengthSetView(out, W));
                continue;
            }

            std::fill(acc.begin(), acc.end(), 0);
            bool whole_is_atom = false;

            // Trivial atoms (z, 1).  Columns at or below F explicitly; every
            // z > F is a column, so those fold into the prefix union.
            for (int64_t z : low_cols) {
                if (z >= x) break;
                or_into(acc.data(), layer(n - 1, x - z), W);
            }
            if (x - frobenius - 1 >= 1)
                or_into(acc.data(),
                        &px[static_cast<std::size_t>(x - frobenius - 1) * W], W);

            // Atoms in finite columns: short explicit height range.
            for (const auto& a : finite_atoms) {
                if (a.x > x) break;
                if (a.x == x) {
                    if (n >= a.min_atom && n <= a.height) whole_is_atom = true;
                    continue;
                }
                const int64_t q_hi = std::min(a.height, n - 1);
                for (int64_t q = a.min_atom; q <= q_hi; ++q)
                    or_into(acc.data(), layer(n - q, x - a.x), W);
            }

            // Atoms in infinite columns: one prefix-union lookup each.
            for (std::size_t c = 0; c < unbounded_atoms.size(); ++c) {
                const auto& a = unbounded_atoms[c];
                if (a.x > x) break;
                if (a.x == x) {
                    if (n >= a.min_atom) whole_is_atom = true;
                    continue;
                }
                if (n - a.min_atom >= 1)
                    or_into(acc.data(),
                            &vz[c * stride + static_cast<std::size_t>(x - a.x) * W],
                            W);
            }

            // Each remainder length gains one for the atom peeled off.
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < W; ++i) {
                const std::uint64_t v = acc[i];
                out[i] = (v << 1) | carry;
                carry = v >> 63;
            }
            if (whole_is_atom) out[0] |= 2;

            visit(x, n, LengthSetView(out, W));
        }
    }
}

} // namespace leamer
