#include "leamer/numerical_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace leamer {

namespace {

// Entry cap for the membership table: generous for any sane input, small
// enough that a typo cannot allocate gigabytes.
constexpr int64_t kMaxTableSize = 50'000'000;

} // namespace

NumericalMonoid NumericalMonoid::make(std::vector<int64_t> raw_generators) {
    if (raw_generators.empty())
        fail(ErrorCode::EmptyGenerators, "generator list is empty");
    for (int64_t g : raw_generators)
        if (g <= 0)
            fail(ErrorCode::InvalidGenerator,
                 "generator " + std::to_string(g) + " is not positive");

    std::sort(raw_generators.begin(), raw_generators.end());
    raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                         raw_generators.end());

    int64_t g_all = 0;
    for (int64_t g : raw_generators) g_all = std::gcd(g_all, g);
    if (g_all != 1)
        fail(ErrorCode::NonCoprimeGenerators,
             "generators have gcd " + std::to_string(g_all) + "; expected 1");

    // Table bound: the Frobenius number is below smallest*largest (Schur), and
    // so is frobenius + smallest, which later column computations lean on.
    const int64_t lo = raw_generators.front();
    const int64_t hi = raw_generators.back();
    const int64_t size = lo * hi + 1;
    if (size > kMaxTableSize)
        fail(ErrorCode::GeneratorsTooLarge,
             "membership table would need " + std::to_string(size) + " entries");

    NumericalMonoid monoid;
    monoid.table_.assign(static_cast<std::size_t>(size), false);
    monoid.table_[0] = true;
    for (int64_t x = 1; x < size; ++x) {
        for (int64_t g : raw_generators) {
            if (g > x) break;
            if (monoid.table_[static_cast<std::size_t>(x - g)]) {
                monoid.table_[static_cast<std::size_t>(x)] = true;
                break;
            }
        }
    }

    monoid.frobenius_ = -1;
    for (int64_t x = size - 1; x >= 0; --x) {
        if (!monoid.table_[static_cast<std::size_t>(x)]) {
            monoid.frobenius_ = x;
            break;
        }
    }

    // A supplied generator is redundant exactly when it splits into two
    // nonzero members; the survivors form the minimal generating set.
    for (int64_t g : raw_generators) {
        bool reducible = false;
        for (int64_t a = 1; a <= g / 2 && !reducible; ++a) {
            if (monoid.table_[static_cast<std::size_t>(a)] &&
                monoid.table_[static_cast<std::size_t>(g - a)])
                reducible = true;
        }
        if (!reducible) monoid.generators_.push_back(g);
    }

    return monoid;
}

std::vector<int64_t> NumericalMonoid::apery_set(int64_t m) const {
    if (m <= 0 || !contains(m))
        fail(ErrorCode::NotAMember,
             std::to_string(m) + " is not a nonzero member of the monoid");

    std::vector<int64_t> least(static_cast<std::size_t>(m), -1);
    int64_t remaining = m;
    for (int64_t x = 0; remaining > 0; ++x) {
        if (!contains(x)) continue;
        auto& slot = least[static_cast<std::size_t>(x % m)];
        if (slot < 0) {
            slot = x;
            --remaining;
        }
    }
    return least;
}

} // namespace leamer
