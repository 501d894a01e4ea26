#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leamer/factorization.hpp"
#include "leamer/leamer_monoid.hpp"
#include "leamer/rational.hpp"

namespace leamer {

// Steepest finite-column top: max over finite columns of height/start, the
// slope below which all of the monoid's interesting factorization behavior
// lives.  Throws NoFiniteColumns when every column is infinite.
Rational slope_limit(const LeamerMonoid& s);

// The column top (x, h(x)) attaining slope_limit.
Element slope_limit_witness(const LeamerMonoid& s);

// Largest height of a reducible element sitting at the top of its column's
// reducible range (finite and mixed columns only).  0 with no witness when no
// column qualifies.
struct NStarResult {
    int64_t value = 0;
    std::optional<Element> witness;
};
NStarResult n_star(const LeamerMonoid& s);

// 1 + the largest minimum factorization length, computed over a region whose
// boundary the stabilization results certify.  Also reports the element
// attaining the maximum and the region actually scanned.
struct LambdaResult {
    int64_t value = 0;
    std::optional<Element> witness;
    int64_t x_scanned = 0;
    int64_t n_scanned = 0;
};
LambdaResult lambda(const LeamerMonoid& s);

// Largest gap between successive factorization lengths anywhere in the
// monoid, located by scanning x <= x_B under the slope-limit line (for
// monoids without finite columns, a horizontal band replaces the wedge).
struct MaxDeltaResult {
    int64_t value = 0;
    std::optional<Element> witness;
    int64_t x_bound = 0; // the x_B actually used
};
MaxDeltaResult max_delta(const LeamerMonoid& s);

// The x_B region bound: frobenius + xf + (nf + lambda)(frobenius + x0).
int64_t x_bound(const LeamerMonoid& s);

// Union of per-element gap sets over the window x <= x_max, n <= n_max;
// when include_region is set, the max_delta scan region is unioned in as
// well, making the maximum of the result the true maximum gap.
std::vector<int64_t> observed_delta(const LeamerMonoid& s, int64_t x_max,
                                    int64_t n_max, bool include_region = true);

// Max of catenary_of over window elements below the slope-limit line (all of
// n <= n_max when the line is undefined).
struct CatenaryObservation {
    int64_t value = 0;
    std::optional<Element> witness;
};
CatenaryObservation observed_catenary(const LeamerMonoid& s, int64_t x_max,
                                      int64_t n_max,
                                      std::optional<std::uint64_t> cap = std::nullopt);

// The element (t*xf, t) together with its exact elasticity; the two-part and
// t-part factorizations from the unbounded-elasticity construction make this
// t/2 for every valid t.  Throws WitnessNotApplicable for t < 4.
std::pair<Element, Rational> elasticity_witness(const LeamerMonoid& s, int64_t t);

// The element t*(xf, nf) used for the refined (length-k) witnesses, plus
// which of the target lengths {2, k, t} its length set realizes and its
// elasticity.  Throws WitnessNotApplicable unless 2 <= k <= t and t >= 4.
struct RefinedWitness {
    Element element;
    std::vector<int64_t> target_lengths;   // {2, k, t}
    std::vector<int64_t> realized_lengths; // targets found in the length set
    Rational elasticity{1};
};
RefinedWitness refined_elasticity_witness(const LeamerMonoid& s, int64_t k,
                                          int64_t t);

struct InvariantReport {
    bool has_finite_columns = true;
    Rational s_L{0};                       // valid when has_finite_columns
    std::optional<Element> s_L_witness;
    int64_t n_star = 0;
    std::optional<Element> n_star_witness;
    int64_t lambda = 0;
    std::optional<Element> lambda_witness;
    int64_t x_B = 0;
    int64_t max_delta = 0;
    std::optional<Element> max_delta_witness;
    std::vector<int64_t> observed_delta;
    bool delta_is_interval = false;
    // -1 when the (expensive) windowed catenary observation was not requested.
    int64_t observed_catenary_max = -1;
    std::optional<Element> catenary_witness;
};

// Assembles everything above; the windowed catenary maximum is only computed
// when requested since it enumerates factorizations.
InvariantReport invariant_report(const LeamerMonoid& s,
                                 bool with_catenary = false);

// Default CLI window: wide enough for every nontrivial atom plus a fringe.
std::pair<int64_t, int64_t> default_window(const LeamerMonoid& s);

} // namespace leamer
