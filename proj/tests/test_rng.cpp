#include <doctest.h>

#include <cmath>
#include <set>

#include "vqx/rng.hpp"

using namespace vqx;

TEST_SUITE("rng") {

TEST_CASE("same seed reproduces the same stream") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("children are independent of parent draw position") {
    Rng a(7);
    Rng b(7);
    (void)b.next_u64();
    (void)b.next_u64();
    CHECK(a.child(3).next_u64() == b.child(3).next_u64());
}

TEST_CASE("child streams differ") {
    Rng a(123);
    std::set<uint64_t> firsts;
    for (uint64_t s = 0; s < 64; ++s) firsts.insert(a.child(s).next_u64());
    CHECK(firsts.size() == 64);
}

TEST_CASE("uniform stays in [0, 1) with a sane mean") {
    Rng rng(5);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) < 0.01);
}

TEST_CASE("normal moments") {
    Rng rng(11);
    double sum = 0.0, sum2 = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double v = rng.normal();
        sum += v;
        sum2 += v * v;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(std::abs(sum2 / n - 1.0) < 0.03);
}

TEST_CASE("uniform_int is unbiased across residues") {
    Rng rng(17);
    long counts[7] = {0};
    const int n = 70000;
    for (int i = 0; i < n; ++i) counts[rng.uniform_int(7)]++;
    for (long c : counts) CHECK(std::abs(c - 10000) < 500);
}

} // TEST_SUITE
