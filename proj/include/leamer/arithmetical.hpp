#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leamer/leamer_monoid.hpp"

namespace leamer {

// Parameters (m, k, s) of a monoid generated by the arithmetic progression
// m, m+s, ..., m+ks with gcd(m, s) = 1.  These are the monoids whose column
// structure, Delta set, and catenary degree have closed forms; everything in
// this header either evaluates a closed form or checks one against the
// generic engine.
struct ArithParams {
    int64_t m = 0;
    int64_t k = 0;
    int64_t s = 0;

    // Validates m >= 2, 1 <= k <= m-1, s >= 1, gcd(m, s) = 1, and that s lies
    // outside the generated monoid (required by the run-monoid construction).
    static ArithParams make(int64_t m, int64_t k, int64_t s);

    std::vector<int64_t> generators() const; // m, m+s, ..., m+ks
    NumericalMonoid monoid() const;
    LeamerMonoid leamer() const;

    // floor((m-2)/k): the width parameter controlling reducible bands, the
    // Delta set, and the catenary degree.
    int64_t band() const { return (m - 2) / k; }

    friend bool operator==(const ArithParams&, const ArithParams&) = default;
};

// Some(m, k, s) iff the minimal generators of g form the arithmetic
// progression m, m+s, ..., m+ks with the given step.
std::optional<ArithParams> detect(const NumericalMonoid& g, int64_t s);

// First infinite column: m * (band + 1).
int64_t xf_formula(const ArithParams& p);

// Closed-form column profile at x, or nullopt when x starts no column.
// Pins existence, height, class, and first nontrivial atom height; the
// split_bound field is never filled in (that datum comes from the engine).
std::optional<ColumnProfile> column_formula(const ArithParams& p, int64_t x);

// The full gap set {1, ..., band + 1}.
std::vector<int64_t> delta_formula(const ArithParams& p);

// band + 3.
int64_t catenary_formula(const ArithParams& p);

// Largest admissible turtle parameter, band + 1 (= m - 1 when k = 1).
int64_t beta_max(const ArithParams& p);

// The column hosting the turtle witnesses: m * (band + s + 2) for k > 1 and
// m * (m + s + 1) for k = 1.
int64_t turtle_x(const ArithParams& p);

// The witness element (turtle_x, k*beta + 2) whose length set is claimed to
// meet {2, ..., beta+2} in exactly {2, beta+2}, demonstrating a gap of beta.
// `observed` is computed by the generic engine and `holds` records whether
// the claim checked out.  Throws BetaOutOfRange unless 1 <= beta <= beta_max.
struct TurtleWitness {
    Element element;
    int64_t beta = 0;
    std::vector<int64_t> expected; // {2, beta + 2}
    std::vector<int64_t> observed; // L(element) intersected with {2..beta+2}
    bool holds = false;
};
TurtleWitness turtle_witness(const ArithParams& p, int64_t beta);

// Differential test of every closed form against the generic engine:
//  - column-by-column comparison for 1 <= x <= x_max (existence, height,
//    class, first nontrivial atom height),
//  - xf_formula vs. the engine's first infinite column,
//  - max of delta_formula vs. the engine's region-certified largest gap,
//  - catenary_formula vs. the largest catenary degree over the turtle
//    witnesses, with every witness gap pattern checked,
//  - existence of a height-2 atom (the engine's hw_witness).
// Mismatches are report payload, never exceptions.  Requires
// x_max >= 3 * xf_formula(p).
struct CrossValidation {
    ArithParams params;
    int64_t x_max = 0;
    int64_t columns_checked = 0;
    int64_t xf_closed = 0;
    int64_t xf_engine = 0;
    int64_t max_delta_closed = 0;
    int64_t max_delta_engine = 0;
    int64_t catenary_closed = 0;
    int64_t catenary_engine = 0;
    bool columns_ok = false;
    bool xf_ok = false;
    bool delta_ok = false;
    bool catenary_ok = false;
    bool witnesses_ok = false;
    bool hw_ok = false;
    bool pass = false;
    std::vector<std::string> mismatches;
};
CrossValidation cross_validate(const ArithParams& p, int64_t x_max);

// cross_validate over every (m, k, s) with 3 <= m <= m_max, 1 <= k <= m-1,
// 1 <= s <= s_max and gcd(m, s) = 1, each at x_max = 3 * xf_formula.
// Worker count: `threads` if positive, else the LEAMER_THREADS environment
// variable, else 1.  Entries are ordered by (m, k, s) regardless of the
// worker count.
struct SweepResult {
    std::vector<CrossValidation> entries;
    int64_t checked = 0;
    int64_t failed = 0;
};
SweepResult sweep(int64_t m_max, int64_t s_max, int threads = 0);

} // namespace leamer
