#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "leamer/numerical_monoid.hpp"
#include "oracles.hpp"

using leamer::Error;
using leamer::ErrorCode;
using leamer::NumericalMonoid;
using std::int64_t;

TEST_CASE("frobenius numbers of the reference monoids") {
    CHECK(NumericalMonoid::make({7, 10}).frobenius() == 53);
    CHECK(NumericalMonoid::make({13, 17, 22, 40}).frobenius() == 89);
    CHECK(NumericalMonoid::make({5, 8, 11}).frobenius() == 17);
    CHECK(NumericalMonoid::make({3, 7}).frobenius() == 11);
    CHECK(NumericalMonoid::make({1}).frobenius() == -1);
    CHECK(NumericalMonoid::make({2, 3}).frobenius() == 1);
}

TEST_CASE("membership basics for <7,10>") {
    auto m = NumericalMonoid::make({7, 10});
    CHECK(m.contains(0));
    CHECK(m.contains(7));
    CHECK(m.contains(10));
    CHECK(m.contains(17));
    CHECK(m.contains(20));
    CHECK_FALSE(m.contains(1));
    CHECK_FALSE(m.contains(9));
    CHECK_FALSE(m.contains(53));
    CHECK(m.contains(54)); // everything past the Frobenius number
    CHECK(m.contains(100000));
    CHECK_FALSE(m.contains(-7));
}

TEST_CASE("minimal generating sets") {
    CHECK(NumericalMonoid::make({7, 10}).generators() == std::vector<int64_t>{7, 10});
    // 14 = 7+7 and 17 = 7+10 are redundant
    CHECK(NumericalMonoid::make({7, 10, 14}).generators() == std::vector<int64_t>{7, 10});
    CHECK(NumericalMonoid::make({7, 10, 17}).generators() == std::vector<int64_t>{7, 10});
    CHECK(NumericalMonoid::make({13, 17, 22, 40}).generators() ==
          std::vector<int64_t>{13, 17, 22, 40});
    CHECK(NumericalMonoid::make({5, 8, 11}).generators() == std::vector<int64_t>{5, 8, 11});
    CHECK(NumericalMonoid::make({1}).generators() == std::vector<int64_t>{1});
    CHECK(NumericalMonoid::make({10, 7, 7, 10}).generators() == std::vector<int64_t>{7, 10});
    CHECK(NumericalMonoid::make({7, 10}).multiplicity() == 7);
}

TEST_CASE("apery set of <7,10> relative to 7") {
    auto m = NumericalMonoid::make({7, 10});
    CHECK(m.apery_set(7) == std::vector<int64_t>{0, 50, 30, 10, 60, 40, 20});
}

TEST_CASE("apery set structure on random monoids") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int64_t> gen_count(1, 4);
    std::uniform_int_distribution<int64_t> gen_value(2, 40);

    int tested = 0;
    while (tested < 30) {
        std::vector<int64_t> gens(static_cast<std::size_t>(gen_count(rng)));
        for (auto& g : gens) g = gen_value(rng);
        int64_t g_all = 0;
        for (int64_t g : gens) g_all = std::gcd(g_all, g);
        if (g_all != 1) continue;
        ++tested;

        auto m = NumericalMonoid::make(gens);
        const int64_t mult = m.multiplicity();
        auto ap = m.apery_set(mult);

        CHECK(ap == oracle::apery(gens, mult));
        CHECK(ap[0] == 0);
        int64_t max_entry = 0;
        for (int64_t i = 0; i < mult; ++i) {
            CHECK(ap[static_cast<std::size_t>(i)] % mult == i);
            CHECK(m.contains(ap[static_cast<std::size_t>(i)]));
            // subtracting the modulus leaves the monoid: these are least members
            CHECK_FALSE(m.contains(ap[static_cast<std::size_t>(i)] - mult));
            max_entry = std::max(max_entry, ap[static_cast<std::size_t>(i)]);
        }
        CHECK(max_entry == m.frobenius() + mult);
    }
}

TEST_CASE("library agrees with the closure oracle on random monoids") {
    std::mt19937 rng(987001);
    std::uniform_int_distribution<int64_t> gen_count(1, 5);
    std::uniform_int_distribution<int64_t> gen_value(2, 60);

    int tested = 0;
    while (tested < 40) {
        std::vector<int64_t> gens(static_cast<std::size_t>(gen_count(rng)));
        for (auto& g : gens) g = gen_value(rng);
        int64_t g_all = 0;
        for (int64_t g : gens) g_all = std::gcd(g_all, g);
        if (g_all != 1) continue;
        ++tested;

        auto m = NumericalMonoid::make(gens);
        int64_t limit = oracle::table_limit(gens);
        auto ref = oracle::members(gens, limit);
        for (int64_t x = 0; x <= limit; ++x)
            REQUIRE(m.contains(x) == ref[static_cast<std::size_t>(x)]);
        CHECK(m.frobenius() == oracle::frobenius(gens));
        CHECK(m.generators() == oracle::minimal_generators(gens));

        // regenerating from the minimal generators reproduces the monoid
        auto m2 = NumericalMonoid::make(m.generators());
        CHECK(m2.frobenius() == m.frobenius());
        for (int64_t x = 0; x <= limit; ++x)
            REQUIRE(m2.contains(x) == m.contains(x));
    }
}

TEST_CASE("monoid closure under addition") {
    std::mt19937 rng(5550123);
    auto m = NumericalMonoid::make({13, 17, 22, 40});
    std::uniform_int_distribution<int64_t> pick(0, 400);
    for (int trial = 0; trial < 2000; ++trial) {
        int64_t x = pick(rng), y = pick(rng);
        if (m.contains(x) && m.contains(y)) CHECK(m.contains(x + y));
    }
}

TEST_CASE("construction and query errors") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };

    CHECK(code_of([] { NumericalMonoid::make({}); }) == ErrorCode::EmptyGenerators);
    CHECK(code_of([] { NumericalMonoid::make({0, 7}); }) == ErrorCode::InvalidGenerator);
    CHECK(code_of([] { NumericalMonoid::make({-3}); }) == ErrorCode::InvalidGenerator);
    CHECK(code_of([] { NumericalMonoid::make({4, 6}); }) == ErrorCode::NonCoprimeGenerators);
    CHECK(code_of([] { NumericalMonoid::make({10000, 9999}); }) ==
          ErrorCode::GeneratorsTooLarge);

    auto m = NumericalMonoid::make({7, 10});
    CHECK(code_of([&] { m.apery_set(11); }) == ErrorCode::NotAMember);
    CHECK(code_of([&] { m.apery_set(0); }) == ErrorCode::NotAMember);
    CHECK(code_of([&] { m.apery_set(-7); }) == ErrorCode::NotAMember);
}
