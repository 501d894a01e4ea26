#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "leamer/leamer_monoid.hpp"
#include "oracles.hpp"

using leamer::ColumnClass;
using leamer::ColumnHeight;
using leamer::Element;
using leamer::Error;
using leamer::ErrorCode;
using leamer::LeamerMonoid;
using leamer::NumericalMonoid;
using std::int64_t;

namespace {

LeamerMonoid make(std::vector<int64_t> gens, int64_t s) {
    return LeamerMonoid::make(NumericalMonoid::make(std::move(gens)), s);
}

} // namespace

TEST_CASE("structural constants of the reference monoids") {
    auto s1 = make({7, 10}, 3);
    CHECK(s1.x0() == 7);
    CHECK(s1.xf() == 42);
    CHECK(s1.nf() == 7);
    CHECK(s1.atom_bound() == 60);
    CHECK(s1.frobenius() == 53);

    auto s2 = make({13, 17, 22, 40}, 4);
    CHECK(s2.x0() == 13);
    CHECK(s2.xf() == 62);
    CHECK(s2.nf() == 11);
    CHECK(s2.atom_bound() == 102);

    auto s3 = make({5, 8, 11}, 3);
    CHECK(s3.x0() == 5);
    CHECK(s3.xf() == 10);
    CHECK(s3.nf() == 5);
    CHECK(s3.atom_bound() == 22);
}

TEST_CASE("membership in the run monoid over <7,10>, step 3") {
    auto s = make({7, 10}, 3);
    CHECK(s.contains(0, 0)); // identity
    CHECK(s.contains(7, 1));
    CHECK(s.contains(14, 2));
    CHECK(s.contains(21, 3));
    CHECK(s.contains(42, 1000)); // infinite column
    CHECK(s.contains(35, 5));
    CHECK_FALSE(s.contains(35, 6));
    CHECK_FALSE(s.contains(7, 2));  // 13 is outside the base monoid
    CHECK_FALSE(s.contains(6, 1));  // no column
    CHECK_FALSE(s.contains(0, 1));
    CHECK_FALSE(s.contains(7, 0));
    CHECK_FALSE(s.contains(-7, 1));
    CHECK(s.contains(1000000, 1)); // far beyond the tables
}

TEST_CASE("column profiles over <7,10>, step 3") {
    auto s = make({7, 10}, 3);

    auto c42 = s.column(42).value();
    CHECK(c42.height == ColumnHeight::infinite());
    CHECK(c42.split_bound == ColumnHeight::finite(6));
    CHECK(c42.min_nontrivial_atom == 7);
    CHECK(c42.cls == ColumnClass::Mixed);

    auto c48 = s.column(48).value();
    CHECK(c48.height == ColumnHeight::infinite());
    CHECK(c48.split_bound == ColumnHeight::finite(4));
    CHECK(c48.min_nontrivial_atom == 5);
    CHECK(c48.cls == ColumnClass::Mixed);

    auto c49 = s.column(49).value();
    CHECK(c49.height == ColumnHeight::infinite());
    CHECK(c49.split_bound == ColumnHeight::infinite());
    CHECK_FALSE(c49.min_nontrivial_atom.has_value());
    CHECK(c49.cls == ColumnClass::PurelyReducible);

    auto c52 = s.column(52).value();
    CHECK(c52.cls == ColumnClass::PurelyReducible);

    auto c60 = s.column(60).value();
    CHECK(c60.height == ColumnHeight::infinite());
    CHECK_FALSE(c60.split_bound.has_value()); // no two-column split of 60
    CHECK(c60.min_nontrivial_atom == 2);
    CHECK(c60.cls == ColumnClass::PurelyIrreducible);

    auto c35 = s.column(35).value();
    CHECK(c35.height == ColumnHeight::finite(5));
    CHECK(c35.cls == ColumnClass::PurelyReducible);

    CHECK(s.column(44).value().height == ColumnHeight::finite(2));

    CHECK_FALSE(s.column(6).has_value());
    CHECK_FALSE(s.column(30).has_value()); // 30+3 = 33 is outside the base

    // far beyond the atom bound: infinite and purely reducible
    auto c200 = s.column(200).value();
    CHECK(c200.height == ColumnHeight::infinite());
    CHECK(c200.split_bound == ColumnHeight::infinite());
    CHECK(c200.cls == ColumnClass::PurelyReducible);
}

TEST_CASE("atoms over <7,10>, step 3") {
    auto s = make({7, 10}, 3);
    CHECK(s.is_atom(7, 1));
    CHECK(s.is_atom(35, 1));
    CHECK_FALSE(s.is_atom(14, 2)); // (7,1) + (7,1)
    CHECK_FALSE(s.is_atom(42, 6));
    CHECK(s.is_atom(42, 7));
    CHECK(s.is_atom(42, 100));
    CHECK(s.is_atom(57, 2));
    CHECK(s.is_atom(60, 2));
    CHECK_FALSE(s.is_atom(61, 2)); // past the atom bound
    CHECK_FALSE(s.is_atom(0, 0));  // identity

    CHECK_THROWS_AS(s.is_atom(9, 1), Error);
    try {
        s.is_atom(35, 6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAnElement);
    }

    CHECK(s.hw_witness() == Element{57, 2});
    CHECK(s.max_nontrivial_atom_column() == 60); // bound attained here

    // height-2 atoms up to the atom bound are exactly (57,2) and (60,2)
    std::vector<int64_t> two_atom_columns;
    for (int64_t x = 1; x <= s.atom_bound(); ++x)
        if (s.contains(x, 2) && s.is_atom(x, 2)) two_atom_columns.push_back(x);
    CHECK(two_atom_columns == std::vector<int64_t>{57, 60});

    CHECK(s.atoms_in_window(20, 3) ==
          std::vector<Element>{{7, 1}, {14, 1}, {17, 1}});
}

TEST_CASE("finite columns of <13,17,22,40>, step 4") {
    auto s = make({13, 17, 22, 40}, 4);
    const std::vector<std::pair<int64_t, int64_t>> expected = {
        {13, 1}, {22, 3}, {26, 2}, {30, 1}, {35, 4}, {39, 3}, {40, 7}, {43, 2},
        {44, 6}, {47, 1}, {48, 5}, {52, 4}, {53, 8}, {56, 3}, {57, 7}, {60, 2},
        {61, 6}, {64, 1}, {65, 5}, {69, 4}, {73, 3}, {77, 2}, {81, 1}};
    std::vector<std::pair<int64_t, int64_t>> found;
    for (int64_t x = 1; x <= s.atom_bound(); ++x) {
        auto c = s.column(x);
        if (c && !c->height.is_infinite) found.emplace_back(x, c->height.value);
    }
    CHECK(found == expected);
}

TEST_CASE("nontrivial atom columns of <13,17,22,40>, step 4") {
    auto s = make({13, 17, 22, 40}, 4);
    const std::vector<std::pair<int64_t, int64_t>> expected = {
        {22, 2},  {40, 2}, {62, 11}, {66, 10}, {70, 9}, {74, 8}, {78, 7},
        {80, 15}, {82, 6}, {86, 5},  {90, 4},  {94, 3}, {98, 2}};
    std::vector<std::pair<int64_t, int64_t>> found;
    for (int64_t x = 1; x <= s.atom_bound(); ++x) {
        auto c = s.column(x);
        if (c && c->min_nontrivial_atom)
            found.emplace_back(x, *c->min_nontrivial_atom);
    }
    CHECK(found == expected);

    // the atom-column bound is not attained for this monoid
    CHECK(s.max_nontrivial_atom_column() == 98);
    CHECK(s.atom_bound() == 102);
    CHECK(*s.max_nontrivial_atom_column() < s.atom_bound());
    CHECK(s.hw_witness() == Element{22, 2});
}

TEST_CASE("first column of <5,8,11>, step 3, is purely atomic") {
    auto s = make({5, 8, 11}, 3);
    auto c5 = s.column(5).value();
    CHECK(c5.height == ColumnHeight::finite(2));
    CHECK_FALSE(c5.split_bound.has_value());
    CHECK(c5.min_nontrivial_atom == 2);
    CHECK(c5.cls == ColumnClass::PurelyIrreducible);
    CHECK(s.hw_witness() == Element{5, 2});

    auto c10 = s.column(10).value();
    CHECK(c10.height == ColumnHeight::infinite());
    CHECK(c10.split_bound == ColumnHeight::finite(4));
    CHECK(c10.min_nontrivial_atom == 5);
}

TEST_CASE("construction errors") {
    auto base = NumericalMonoid::make({7, 10});
    CHECK_THROWS_AS(LeamerMonoid::make(base, 0), Error);
    CHECK_THROWS_AS(LeamerMonoid::make(base, -3), Error);
    try {
        LeamerMonoid::make(base, 7);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StepInMonoid);
    }
    CHECK_THROWS_AS(LeamerMonoid::make(base, 17), Error);
    CHECK_THROWS_AS(LeamerMonoid::make(base, 70), Error);
    // over N every positive step is in the monoid
    CHECK_THROWS_AS(LeamerMonoid::make(NumericalMonoid::make({1}), 5), Error);
}

namespace {

void check_against_oracle(const std::vector<int64_t>& gens, int64_t step) {
    CAPTURE(gens);
    CAPTURE(step);
    auto rm = oracle::make_run_monoid(gens, step);
    auto s = LeamerMonoid::make(NumericalMonoid::make(gens), step);

    const int64_t x_hi = s.atom_bound() + 2 * step + 5;
    const int64_t n_hi = 24;

    // membership agrees with the definitional check
    for (int64_t x = 1; x <= x_hi; ++x)
        for (int64_t n = 1; n <= n_hi; ++n)
            REQUIRE(s.contains(x, n) == rm.contains(x, n));

    // heights agree
    for (int64_t x = 1; x <= x_hi; ++x) {
        auto oh = rm.height(x);
        auto c = s.column(x);
        if (!oh) {
            REQUIRE_FALSE(c.has_value());
            continue;
        }
        REQUIRE(c.has_value());
        if (*oh == -1)
            REQUIRE(c->height == ColumnHeight::infinite());
        else
            REQUIRE(c->height == ColumnHeight::finite(*oh));
    }

    // atom classification agrees with the exhaustive-split oracle on a window
    const int64_t ax_hi = std::min<int64_t>(x_hi, 160);
    for (int64_t x = 1; x <= ax_hi; ++x)
        for (int64_t n = 1; n <= 10; ++n)
            if (s.contains(x, n))
                REQUIRE(s.is_atom(x, n) == rm.is_atom(x, n));

    // every (x,1) is an atom; atoms with n >= 2 are upward closed
    for (int64_t x = 1; x <= x_hi; ++x) {
        if (!s.has_column(x)) continue;
        REQUIRE(s.is_atom(x, 1));
        auto c = s.column(x).value();
        if (c.min_nontrivial_atom) {
            int64_t a = *c.min_nontrivial_atom;
            for (int64_t n = a; n <= n_hi; ++n)
                if (s.contains(x, n)) REQUIRE(s.is_atom(x, n));
            for (int64_t n = 2; n < a; ++n)
                if (s.contains(x, n)) REQUIRE_FALSE(s.is_atom(x, n));
        }
    }

    // columns are downward closed and every x past the Frobenius number
    // starts an infinite column
    for (int64_t x = 1; x <= x_hi; ++x)
        for (int64_t n = 2; n <= n_hi; ++n)
            if (s.contains(x, n)) REQUIRE(s.contains(x, n - 1));
    for (int64_t x = s.frobenius() + 1; x <= x_hi; ++x) {
        REQUIRE(s.has_column(x));
        REQUIRE(s.column(x)->height == ColumnHeight::infinite());
    }

    // nothing above the atom bound carries a nontrivial atom
    for (int64_t x = s.atom_bound() + 1; x <= x_hi; ++x)
        for (int64_t n = 2; n <= 6; ++n)
            if (s.contains(x, n)) REQUIRE_FALSE(s.is_atom(x, n));

    // reported witnesses match direct scans
    std::optional<Element> hw;
    for (int64_t x = 1; x <= s.atom_bound() && !hw; ++x)
        if (rm.contains(x, 2) && rm.is_atom(x, 2)) hw = Element{x, 2};
    REQUIRE(s.hw_witness() == hw);

    // structural constants match definitional scans
    int64_t x0 = 1;
    while (!rm.contains(x0, 1)) ++x0;
    REQUIRE(s.x0() == x0);
    int64_t xf = 1;
    while (rm.height(xf).value_or(0) != -1) ++xf;
    REQUIRE(s.xf() == xf);
    REQUIRE(s.atom_bound() == s.frobenius() + s.x0());
    REQUIRE(s.is_atom(s.xf(), s.nf()));
    REQUIRE(s.nf() >= 2);
    if (s.nf() > 2) REQUIRE_FALSE(s.is_atom(s.xf(), s.nf() - 1));

    // atom listing agrees with a definitional window scan
    const int64_t wx = std::min<int64_t>(s.atom_bound() + 4, 120);
    std::vector<Element> expect;
    for (int64_t x = 1; x <= wx; ++x)
        for (int64_t n = 1; n <= 8; ++n)
            if (rm.contains(x, n) && rm.is_atom(x, n)) expect.push_back({x, n});
    REQUIRE(s.atoms_in_window(wx, 8) == expect);
}

} // namespace

TEST_CASE("library agrees with definitional oracles on fixed monoids") {
    check_against_oracle({7, 10}, 3);
    check_against_oracle({13, 17, 22, 40}, 4);
    check_against_oracle({5, 8, 11}, 3);
    check_against_oracle({3, 7}, 5);
    check_against_oracle({4, 9}, 6);
    check_against_oracle({6, 9, 20}, 2);
}

TEST_CASE("library agrees with definitional oracles on random monoids") {
    std::mt19937 rng(777123);
    std::uniform_int_distribution<int64_t> gen_count(2, 3);
    std::uniform_int_distribution<int64_t> gen_value(3, 15);
    std::uniform_int_distribution<int64_t> step_value(1, 12);

    int tested = 0;
    while (tested < 8) {
        std::vector<int64_t> gens(static_cast<std::size_t>(gen_count(rng)));
        for (auto& g : gens) g = gen_value(rng);
        int64_t g_all = 0;
        for (int64_t g : gens) g_all = std::gcd(g_all, g);
        if (g_all != 1) continue;
        int64_t step = step_value(rng);
        auto in = oracle::members(gens, oracle::table_limit(gens));
        if (step < static_cast<int64_t>(in.size()) &&
            in[static_cast<std::size_t>(step)])
            continue; // step inside the monoid: not a valid instance
        ++tested;
        check_against_oracle(gens, step);
    }
}
