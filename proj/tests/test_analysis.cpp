#include <doctest.h>

#include <cmath>

#include "vqx/analysis.hpp"
#include "vqx/rng.hpp"

using namespace vqx;

namespace {

// O(n^2) textbook-definition oracles, independent of the implementation path

double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double num = 0, dx = 0, dy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        dx += (x[i] - mx) * (x[i] - mx);
        dy += (y[i] - my) * (y[i] - my);
    }
    return num / std::sqrt(dx * dy);
}

std::vector<double> rank_oracle(const std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> ranks(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double below = 0, equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] < v[i]) ++below;
            if (v[j] == v[i]) ++equal;
        }
        ranks[i] = below + 0.5 * (equal + 1);
    }
    return ranks;
}

double kendall_oracle(const std::vector<double>& x, const std::vector<double>& y) {
    const long n = static_cast<long>(x.size());
    double c = 0, d = 0, tx = 0, ty = 0;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            const double p = (x[j] - x[i]) * (y[j] - y[i]);
            if (x[j] == x[i] && y[j] == y[i]) {
                ++tx;
                ++ty;
            } else if (x[j] == x[i]) {
                ++tx;
            } else if (y[j] == y[i]) {
                ++ty;
            } else if (p > 0) {
                ++c;
            } else {
                ++d;
            }
        }
    const double n0 = 0.5 * n * (n - 1);
    return (c - d) / std::sqrt((n0 - tx) * (n0 - ty));
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("pearson basics") {
    const std::vector<double> x = {1, 2, 3};
    CHECK(pearson(x, x) == doctest::Approx(1.0));
    const std::vector<double> neg = {-2 * 1 + 7, -2 * 2 + 7, -2 * 3 + 7};
    CHECK(pearson(x, neg) == doctest::Approx(-1.0));
    CHECK(pearson({1, 2, 3}, {1, 4, 9}) == doctest::Approx(0.98974).epsilon(1e-4));
    CHECK_THROWS(pearson({1, 1, 1}, {1, 2, 3}));
    CHECK_THROWS(pearson({1, 2}, {1, 2}));
}

TEST_CASE("spearman rank behavior") {
    const std::vector<double> x = {0.3, 1.2, 5.0, 9.1};
    std::vector<double> mono;
    for (double v : x) mono.push_back(std::exp(v) + 3.0);
    CHECK(spearman(x, mono) == doctest::Approx(1.0));
    CHECK(spearman({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
    CHECK(spearman({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(0.8));
}

TEST_CASE("kendall tau basics") {
    const std::vector<double> x = {1, 2, 3};
    CHECK(kendall_tau(x, x) == doctest::Approx(1.0));
    CHECK(kendall_tau({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
    CHECK(kendall_tau({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
    CHECK_THROWS(kendall_tau({1, 1, 1}, {2, 2, 2}));
}

TEST_CASE("coefficients match the O(n^2) definition oracles on random vectors") {
    Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        Rng r = rng.child(trial);
        const std::size_t n = 5 + r.uniform_int(46);
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = r.uniform(-5, 5);
        for (auto& v : y) v = r.uniform(-5, 5);
        // inject ties now and then
        if (trial % 3 == 0 && n > 4) {
            x[1] = x[0];
            y[3] = y[2];
        }
        CHECK(pearson(x, y) == doctest::Approx(pearson_oracle(x, y)).epsilon(1e-12));
        CHECK(spearman(x, y) ==
              doctest::Approx(pearson_oracle(rank_oracle(x), rank_oracle(y))).epsilon(1e-12));
        CHECK(kendall_tau(x, y) == doctest::Approx(kendall_oracle(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("rank invariance under strictly increasing transforms") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Rng r = rng.child(trial);
        std::vector<double> x(20), y(20);
        for (auto& v : x) v = r.uniform(-3, 3);
        for (auto& v : y) v = r.uniform(-3, 3);
        std::vector<double> xt;
        for (double v : x) xt.push_back(std::atan(v) * 2 + 10);
        CHECK(spearman(xt, y) == doctest::Approx(spearman(x, y)).epsilon(1e-12));
        CHECK(kendall_tau(xt, y) == doctest::Approx(kendall_tau(x, y)).epsilon(1e-12));
        // pearson under positive affine maps
        std::vector<double> xa;
        for (double v : x) xa.push_back(2.5 * v - 4);
        CHECK(pearson(xa, y) == doctest::Approx(pearson(x, y)).epsilon(1e-12));
        // sign agreement on strictly monotone data
        std::sort(x.begin(), x.end());
        std::vector<double> inc = x;
        for (auto& v : inc) v = v * 3 + 1;
        CHECK(kendall_tau(x, inc) * spearman(x, inc) > 0.0);
    }
}

TEST_CASE("mutual information limits") {
    Rng rng(11);
    std::vector<double> x(100000), y;
    for (auto& v : x) v = rng.uniform(0, 1);

    // constant y: zero information
    std::vector<double> constant(x.size(), 2.0);
    CHECK(mutual_information(x, constant, 8) == doctest::Approx(0.0));

    // identical variables: the diagonal histogram saturates at ln(bins)
    const double self_info = mutual_information(x, x, 8);
    CHECK(self_info == doctest::Approx(std::log(8.0)).epsilon(0.05));

    // independent uniforms: plug-in bias stays below 0.05
    std::vector<double> x2(10000), y2(10000);
    Rng r2(13);
    for (auto& v : x2) v = r2.uniform(0, 1);
    for (auto& v : y2) v = r2.uniform(0, 1);
    CHECK(mutual_information(x2, y2, 10) < 0.05);
}

TEST_CASE("mutual information symmetry and non-negativity on random data") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Rng r = rng.child(trial);
        std::vector<double> x(200), y(200);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = r.normal();
            y[i] = 0.5 * x[i] + r.normal();
        }
        const double xy = mutual_information(x, y);
        CHECK(xy >= 0.0);
        CHECK(xy == doctest::Approx(mutual_information(y, x)).epsilon(1e-12));
    }
}

TEST_CASE("aggregate_by_class means, stds, and the Heisenberg split") {
    auto report = [](double v) {
        CorrelationReport r;
        r.pearson = v;
        r.spearman = v / 2;
        r.kendall = v / 3;
        r.mutual_info = std::abs(v);
        r.n = 20;
        return r;
    };
    std::vector<InstanceReport> reports;
    reports.push_back({{ProblemClass::MaxCut, std::nullopt}, "mc0", report(0.4)});
    reports.push_back({{ProblemClass::MaxCut, std::nullopt}, "mc1", report(0.8)});
    reports.push_back(
        {{ProblemClass::HeisenbergXXZ, GroundKind::BasisState}, "hb", report(-0.2)});
    reports.push_back(
        {{ProblemClass::HeisenbergXXZ, GroundKind::Superposition}, "hs", report(-0.9)});

    const auto aggs = aggregate_by_class(reports);
    REQUIRE(aggs.size() == 3);
    for (const auto& a : aggs) {
        if (a.key.problem_class == ProblemClass::MaxCut) {
            CHECK(a.n_instances == 2);
            CHECK(a.pearson_mean == doctest::Approx(0.6));
            CHECK(a.pearson_std == doctest::Approx(0.2)); // population convention
        } else {
            CHECK(a.n_instances == 1);
            CHECK(a.pearson_std == doctest::Approx(0.0));
            REQUIRE(a.key.subclass.has_value());
        }
    }
    CHECK(aggs[1].key.name() != aggs[2].key.name());
    CHECK_THROWS(aggregate_by_class({}));
}

TEST_CASE("paired series validation") {
    PairedSeries s;
    s.x = {1, 2};
    s.y = {1, 2, 3};
    CHECK_THROWS(s.validate());
    s.y = {1, 2};
    CHECK_THROWS(s.validate(3));
    s.x = {1, 2, std::nan("")};
    s.y = {1, 2, 3};
    CHECK_THROWS(s.validate());
}

} // TEST_SUITE
