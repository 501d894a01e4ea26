#include "leamer/arithmetical.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "leamer/errors.hpp"
#include "leamer/factorization.hpp"
#include "leamer/invariants.hpp"

namespace leamer {
namespace {

// s^{-1} mod m for gcd(m, s) = 1, via the extended Euclidean algorithm.
int64_t mod_inverse(int64_t s, int64_t m) {
    int64_t r0 = m, r1 = s % m;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    return ((t0 % m) + m) % m;
}

std::string describe(const ArithParams& p) {
    std::ostringstream os;
    os << "(m=" << p.m << ", k=" << p.k << ", s=" << p.s << ")";
    return os.str();
}

std::string describe_profile(const std::optional<ColumnProfile>& c) {
    if (!c) return "no column";
    std::ostringstream os;
    if (c->height.is_infinite)
        os << "height inf";
    else
        os << "height " << c->height.value;
    os << ", " << to_string(c->cls) << ", first atom ";
    if (c->min_nontrivial_atom)
        os << *c->min_nontrivial_atom;
    else
        os << "none";
    return os.str();
}

TurtleWitness check_turtle(const ArithParams& p, LengthOracle& oracle,
                           int64_t beta) {
    TurtleWitness w;
    w.beta = beta;
    w.element = Element{turtle_x(p), p.k * beta + 2};
    w.expected = {2, beta + 2};
    for (int64_t len : oracle.lengths(w.element))
        if (2 <= len && len <= beta + 2) w.observed.push_back(len);
    w.holds = w.observed == w.expected;
    return w;
}

} // namespace

ArithParams ArithParams::make(int64_t m, int64_t k, int64_t s) {
    if (m < 2) fail(ErrorCode::InvalidArgument, "need m >= 2");
    if (k < 1 || k > m - 1)
        fail(ErrorCode::InvalidArgument, "need 1 <= k <= m-1");
    if (s < 1) fail(ErrorCode::InvalidArgument, "need s >= 1");
    if (std::gcd(m, s) != 1)
        fail(ErrorCode::InvalidArgument, "need gcd(m, s) = 1");
    ArithParams p{m, k, s};
    if (p.monoid().contains(s))
        fail(ErrorCode::StepInMonoid,
             "step " + std::to_string(s) + " lies in the generated monoid");
    return p;
}

std::vector<int64_t> ArithParams::generators() const {
    std::vector<int64_t> gens;
    gens.reserve(static_cast<std::size_t>(k) + 1);
    for (int64_t j = 0; j <= k; ++j) gens.push_back(m + j * s);
    return gens;
}

NumericalMonoid ArithParams::monoid() const {
    return NumericalMonoid::make(generators());
}

LeamerMonoid ArithParams::leamer() const {
    return LeamerMonoid::make(monoid(), s);
}

std::optional<ArithParams> detect(const NumericalMonoid& g, int64_t s) {
    const auto& gens = g.generators();
    if (gens.size() < 2 || s < 1) return std::nullopt;
    for (std::size_t j = 1; j < gens.size(); ++j)
        if (gens[j] - gens[j - 1] != s) return std::nullopt;
    const int64_t m = gens.front();
    const int64_t k = static_cast<int64_t>(gens.size()) - 1;
    if (m < 2 || k > m - 1 || std::gcd(m, s) != 1 || g.contains(s))
        return std::nullopt;
    return ArithParams{m, k, s};
}

int64_t xf_formula(const ArithParams& p) { return p.m * (p.band() + 1); }

std::optional<ColumnProfile> column_formula(const ArithParams& p, int64_t x) {
    if (x < 1) return std::nullopt;
    // Coordinates: x = alpha*m + i*s with 0 <= i <= m-1.
    const int64_t i = (x % p.m) * mod_inverse(p.s, p.m) % p.m;
    const int64_t rest = x - i * p.s;
    if (rest <= 0 || rest % p.m != 0) return std::nullopt;
    const int64_t alpha = rest / p.m;

    ColumnProfile c;
    c.x = x;
    if (p.k * alpha <= p.m - 2) {
        // Finite regime: a column iff the run has at least one step left.
        if (i > p.k * alpha - 1) return std::nullopt;
        const int64_t h = p.k * alpha - i;
        c.height = ColumnHeight::finite(h);
        if (h == 1) {
            c.cls = ColumnClass::PurelyIrreducible;
        } else if (alpha == 1 && p.k >= 2) {
            c.cls = ColumnClass::PurelyIrreducible;
            c.min_nontrivial_atom = 2;
        } else {
            c.cls = ColumnClass::PurelyReducible;
        }
        return c;
    }
    c.height = ColumnHeight::infinite();
    if (alpha == p.band() + 1) {
        // The one infinite stratum carrying nontrivial atoms.  When
        // k = m-1 these columns are minimal generators, have no two-column
        // split at all, and are atomic from height 2 up.
        const int64_t first =
            p.k == p.m - 1 ? 2 : std::max<int64_t>(2, p.k * alpha - i + 1);
        c.min_nontrivial_atom = first;
        c.cls = first == 2 ? ColumnClass::PurelyIrreducible
                           : ColumnClass::Mixed;
    } else {
        c.cls = ColumnClass::PurelyReducible;
    }
    return c;
}

std::vector<int64_t> delta_formula(const ArithParams& p) {
    std::vector<int64_t> out;
    for (int64_t g = 1; g <= p.band() + 1; ++g) out.push_back(g);
    return out;
}

int64_t catenary_formula(const ArithParams& p) { return p.band() + 3; }

int64_t beta_max(const ArithParams& p) { return p.band() + 1; }

int64_t turtle_x(const ArithParams& p) {
    return p.k == 1 ? p.m * (p.m + p.s + 1) : p.m * (p.band() + p.s + 2);
}

TurtleWitness turtle_witness(const ArithParams& p, int64_t beta) {
    if (beta < 1 || beta > beta_max(p))
        fail(ErrorCode::BetaOutOfRange,
             "beta must lie in 1.." + std::to_string(beta_max(p)));
    auto s = p.leamer();
    LengthOracle oracle(s);
    return check_turtle(p, oracle, beta);
}

CrossValidation cross_validate(const ArithParams& p, int64_t x_max) {
    if (x_max < 3 * xf_formula(p))
        fail(ErrorCode::InvalidArgument,
             "x_max must be at least 3 * xf_formula");
    CrossValidation r;
    r.params = p;
    r.x_max = x_max;
    auto s = p.leamer();

    r.columns_ok = true;
    for (int64_t x = 1; x <= x_max; ++x) {
        auto closed = column_formula(p, x);
        auto engine = s.column(x);
        if (closed || engine) ++r.columns_checked;
        const bool same =
            closed.has_value() == engine.has_value() &&
            (!closed || (closed->height == engine->height &&
                         closed->cls == engine->cls &&
                         closed->min_nontrivial_atom ==
                             engine->min_nontrivial_atom));
        if (!same) {
            r.columns_ok = false;
            r.mismatches.push_back(
                "column " + std::to_string(x) + ": closed form gives " +
                describe_profile(closed) + ", engine gives " +
                describe_profile(engine));
        }
    }

    r.xf_closed = xf_formula(p);
    r.xf_engine = s.xf();
    r.xf_ok = r.xf_closed == r.xf_engine;
    if (!r.xf_ok)
        r.mismatches.push_back("xf: closed form " +
                               std::to_string(r.xf_closed) + " vs engine " +
                               std::to_string(r.xf_engine));

    r.max_delta_closed = p.band() + 1;
    r.max_delta_engine = max_delta(s).value;
    r.delta_ok = r.max_delta_closed == r.max_delta_engine;
    if (!r.delta_ok)
        r.mismatches.push_back(
            "max gap: closed form " + std::to_string(r.max_delta_closed) +
            " vs engine " + std::to_string(r.max_delta_engine));

    LengthOracle oracle(s);
    r.witnesses_ok = true;
    r.catenary_closed = catenary_formula(p);
    r.catenary_engine = 0;
    for (int64_t beta = 1; beta <= beta_max(p); ++beta) {
        auto w = check_turtle(p, oracle, beta);
        if (!w.holds) {
            r.witnesses_ok = false;
            r.mismatches.push_back(
                "turtle beta=" + std::to_string(beta) + " at (" +
                std::to_string(w.element.x) + "," +
                std::to_string(w.element.n) + "): gap pattern not {2," +
                std::to_string(beta + 2) + "}");
        }
        r.catenary_engine =
            std::max(r.catenary_engine, catenary_of(s, w.element));
    }
    r.catenary_ok = r.catenary_closed == r.catenary_engine;
    if (!r.catenary_ok)
        r.mismatches.push_back(
            "catenary: closed form " + std::to_string(r.catenary_closed) +
            " vs engine max over witnesses " +
            std::to_string(r.catenary_engine));

    auto hw = s.hw_witness();
    r.hw_ok = hw.has_value() && hw->n == 2 && s.is_atom(hw->x, hw->n);
    if (!r.hw_ok)
        r.mismatches.push_back("no height-2 atom found for " + describe(p));

    r.pass = r.columns_ok && r.xf_ok && r.delta_ok && r.catenary_ok &&
             r.witnesses_ok && r.hw_ok;
    return r;
}

SweepResult sweep(int64_t m_max, int64_t s_max, int threads) {
    std::vector<ArithParams> tuples;
    for (int64_t m = 3; m <= m_max; ++m)
        for (int64_t k = 1; k <= m - 1; ++k)
            for (int64_t s = 1; s <= s_max; ++s) {
                if (std::gcd(m, s) != 1) continue;
                ArithParams p{m, k, s};
                if (p.monoid().contains(s)) continue; // not a valid step
                tuples.push_back(p);
            }

    if (threads <= 0) {
        if (const char* env = std::getenv("LEAMER_THREADS"))
            threads = std::atoi(env);
        if (threads <= 0) threads = 1;
    }
    threads = std::min<int>(threads, static_cast<int>(tuples.size()));

    SweepResult result;
    result.entries.resize(tuples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next.fetch_add(1); j < tuples.size();
             j = next.fetch_add(1))
            result.entries[j] =
                cross_validate(tuples[j], 3 * xf_formula(tuples[j]));
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    result.checked = static_cast<int64_t>(result.entries.size());
    for (const auto& entry : result.entries)
        if (!entry.pass) ++result.failed;
    return result;
}

} // namespace leamer
