#include "leamer/invariants.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "leamer/region_scan.hpp"

namespace leamer {

namespace {

struct SlopeScan {
    bool found = false;
    Rational value{0};
    Element witness;
};

SlopeScan slope_scan(const LeamerMonoid& s) {
    SlopeScan out;
    for (int64_t x = s.x0(); x <= s.frobenius(); ++x) {
        auto c = s.column(x);
        if (!c || c->height.is_infinite) continue;
        Rational candidate(c->height.value, x);
        if (!out.found || candidate > out.value) {
            out.found = true;
            out.value = candidate;
            out.witness = Element{x, c->height.value};
        }
    }
    return out;
}

// Scan ceiling in n for region scans: the wedge top under the slope line, or
// a horizontal band when no slope line exists.
int64_t wedge_top(const SlopeScan& slope, const LeamerMonoid& s, int64_t x) {
    if (slope.found) return floor_scaled(slope.value, x);
    return s.nf() + 6;
}

struct LambdaScan {
    LambdaResult result;
    SlopeScan slope;
};

LambdaScan lambda_scan(const LeamerMonoid& s) {
    LambdaScan out;
    out.slope = slope_scan(s);
    const int64_t frobenius = s.frobenius();
    // Rows n <= nf stabilize past nf*F; higher rows carry min length <= 2
    // outside x <= xf+F; above the wedge top everything has min length <= 2.
    const int64_t x_hi = std::max(s.xf() + frobenius, s.nf() * frobenius) +
                         s.base().multiplicity();
    const int64_t n_hi = std::max(s.nf(), wedge_top(out.slope, s, x_hi)) + 1;

    int64_t best = 0;
    std::optional<Element> witness;
    scan_lengths(s, x_hi, n_hi,
                 [&](int64_t x, int64_t n, const LengthSetView& view) {
                     const int64_t shortest = view.min();
                     if (shortest > best) {
                         best = shortest;
                         witness = Element{x, n};
                     }
                 });
    out.result.value = 1 + best;
    out.result.witness = witness;
    out.result.x_scanned = x_hi;
    out.result.n_scanned = n_hi;
    return out;
}

int64_t x_bound_for(const LeamerMonoid& s, int64_t lambda_value) {
    return s.frobenius() + s.xf() +
           (s.nf() + lambda_value) * (s.frobenius() + s.x0());
}

MaxDeltaResult max_delta_impl(const LeamerMonoid& s, const SlopeScan& slope,
                              int64_t lambda_value,
                              std::set<int64_t>* collect_gaps) {
    MaxDeltaResult out;
    out.x_bound = x_bound_for(s, lambda_value);
    const int64_t n_hi = wedge_top(slope, s, out.x_bound);
    scan_lengths(s, out.x_bound, n_hi,
                 [&](int64_t x, int64_t n, const LengthSetView& view) {
                     if (n > wedge_top(slope, s, x)) return;
                     if (collect_gaps) {
                         int64_t prev = -1;
                         for (int64_t len : view.to_vector()) {
                             if (prev >= 0 && len - prev > 0)
                                 collect_gaps->insert(len - prev);
                             prev = len;
                         }
                     }
                     const int64_t gap = view.max_gap();
                     if (gap > out.value) {
                         out.value = gap;
                         out.witness = Element{x, n};
                     }
                 });
    return out;
}

} // namespace

Rational slope_limit(const LeamerMonoid& s) {
    auto scan = slope_scan(s);
    if (!scan.found)
        fail(ErrorCode::NoFiniteColumns,
             "every column is infinite; the slope limit is undefined");
    return scan.value;
}

Element slope_limit_witness(const LeamerMonoid& s) {
    auto scan = slope_scan(s);
    if (!scan.found)
        fail(ErrorCode::NoFiniteColumns,
             "every column is infinite; the slope limit is undefined");
    return scan.witness;
}

NStarResult n_star(const LeamerMonoid& s) {
    NStarResult out;
    for (int64_t x = s.x0(); x <= s.atom_bound(); ++x) {
        auto c = s.column(x);
        if (!c || !c->split_bound) continue;
        if (c->split_bound->is_infinite) continue; // reducible range unbounded
        const int64_t height_cap =
            c->height.is_infinite ? c->split_bound->value : c->height.value;
        const int64_t top = std::min(c->split_bound->value, height_cap);
        if (top < 2) continue;
        if (top > out.value) {
            out.value = top;
            out.witness = Element{x, top};
        }
    }
    return out;
}

LambdaResult lambda(const LeamerMonoid& s) { return lambda_scan(s).result; }

int64_t x_bound(const LeamerMonoid& s) {
    return x_bound_for(s, lambda(s).value);
}

MaxDeltaResult max_delta(const LeamerMonoid& s) {
    auto ls = lambda_scan(s);
    return max_delta_impl(s, ls.slope, ls.result.value, nullptr);
}

std::vector<int64_t> observed_delta(const LeamerMonoid& s, int64_t x_max,
                                    int64_t n_max, bool include_region) {
    if (x_max < 1 || n_max < 1)
        fail(ErrorCode::InvalidArgument, "window must be positive");
    std::set<int64_t> gaps;
    scan_lengths(s, x_max, n_max,
                 [&](int64_t, int64_t, const LengthSetView& view) {
                     int64_t prev = -1;
                     for (int64_t len : view.to_vector()) {
                         if (prev >= 0) gaps.insert(len - prev);
                         prev = len;
                     }
                 });
    if (include_region) {
        auto ls = lambda_scan(s);
        max_delta_impl(s, ls.slope, ls.result.value, &gaps);
    }
    return std::vector<int64_t>(gaps.begin(), gaps.end());
}

CatenaryObservation observed_catenary(const LeamerMonoid& s, int64_t x_max,
                                      int64_t n_max,
                                      std::optional<std::uint64_t> cap) {
    if (x_max < 1 || n_max < 1)
        fail(ErrorCode::InvalidArgument, "window must be positive");
    auto slope = slope_scan(s);
    CatenaryObservation out;
    for (int64_t x = 1; x <= x_max; ++x) {
        const int64_t n_hi =
            slope.found ? std::min(n_max, floor_scaled(slope.value, x)) : n_max;
        for (int64_t n = 1; n <= n_hi; ++n) {
            if (!s.contains(x, n)) continue;
            const int64_t c = catenary_of(s, Element{x, n}, cap);
            if (c > out.value) {
                out.value = c;
                out.witness = Element{x, n};
            }
        }
    }
    return out;
}

std::pair<Element, Rational> elasticity_witness(const LeamerMonoid& s,
                                                int64_t t) {
    if (t < 4)
        fail(ErrorCode::WitnessNotApplicable,
             "witness construction needs t >= 4, got " + std::to_string(t));
    const Element e{t * s.xf(), t};
    LengthOracle oracle(s);
    return {e, oracle.elasticity(e)};
}

RefinedWitness refined_elasticity_witness(const LeamerMonoid& s, int64_t k,
                                          int64_t t) {
    if (t < 4 || k < 2 || k > t)
        fail(ErrorCode::WitnessNotApplicable,
             "refined witness needs t >= 4 and 2 <= k <= t");
    RefinedWitness out;
    out.element = Element{t * s.xf(), t * s.nf()};
    out.target_lengths = {2, k, t};
    std::sort(out.target_lengths.begin(), out.target_lengths.end());
    out.target_lengths.erase(
        std::unique(out.target_lengths.begin(), out.target_lengths.end()),
        out.target_lengths.end());
    LengthOracle oracle(s);
    auto summary = oracle.summary(out.element);
    for (int64_t target : out.target_lengths)
        if (std::binary_search(summary.lengths.begin(), summary.lengths.end(),
                               target))
            out.realized_lengths.push_back(target);
    out.elasticity = summary.elasticity;
    return out;
}

InvariantReport invariant_report(const LeamerMonoid& s, bool with_catenary) {
    InvariantReport report;
    auto ls = lambda_scan(s);
    report.has_finite_columns = ls.slope.found;
    if (ls.slope.found) {
        report.s_L = ls.slope.value;
        report.s_L_witness = ls.slope.witness;
    }
    auto ns = n_star(s);
    report.n_star = ns.value;
    report.n_star_witness = ns.witness;
    report.lambda = ls.result.value;
    report.lambda_witness = ls.result.witness;
    report.x_B = x_bound_for(s, ls.result.value);

    std::set<int64_t> gaps;
    auto md = max_delta_impl(s, ls.slope, ls.result.value, &gaps);
    report.max_delta = md.value;
    report.max_delta_witness = md.witness;

    auto [wx, wn] = default_window(s);
    scan_lengths(s, wx, wn, [&](int64_t, int64_t, const LengthSetView& view) {
        int64_t prev = -1;
        for (int64_t len : view.to_vector()) {
            if (prev >= 0) gaps.insert(len - prev);
            prev = len;
        }
    });
    report.observed_delta.assign(gaps.begin(), gaps.end());
    const int64_t top =
        report.observed_delta.empty() ? 0 : report.observed_delta.back();
    report.delta_is_interval =
        top > 0 && static_cast<int64_t>(report.observed_delta.size()) == top &&
        report.observed_delta.front() == 1;

    if (with_catenary) {
        auto oc = observed_catenary(s, wx, wn);
        report.observed_catenary_max = oc.value;
        report.catenary_witness = oc.witness;
    }
    return report;
}

std::pair<int64_t, int64_t> default_window(const LeamerMonoid& s) {
    const int64_t x_max =
        s.frobenius() + s.x0() + 2 * s.base().multiplicity();
    auto slope = slope_scan(s);
    const int64_t n_max = slope.found
                              ? floor_scaled(slope.value, x_max) + 2
                              : s.nf() + 7;
    return {x_max, n_max};
}

} // namespace leamer
