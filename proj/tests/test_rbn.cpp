#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cxm/rbn.hpp"

using namespace cxm;

TEST_CASE("generation is deterministic and well-formed") {
    Rbn a = Rbn::generate(100, 2, 42);
    Rbn b = Rbn::generate(100, 2, 42);
    CHECK(a.state() == b.state());
    for (int t = 0; t < 1000; ++t) {
        a.step();
        b.step();
    }
    CHECK(a.state() == b.state());

    Rbn c = Rbn::generate(100, 2, 43);
    CHECK(c.state() != a.state());  // different seed, different network
}

TEST_CASE("generation rejects bad parameters") {
    CHECK_THROWS_AS(Rbn::generate(0, 0, 1), parameter_error);
    CHECK_THROWS_AS(Rbn::generate(5, 6, 1), parameter_error);
}

TEST_CASE("K=0 networks hit a fixed point in one step") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rbn net = Rbn::generate(20, 0, seed);
        net.step();
        const auto fixed = net.state();
        net.step();
        CHECK(net.state() == fixed);
    }
}

TEST_CASE("synchronous update matches a two-buffer oracle") {
    Rbn net = Rbn::generate(30, 3, 7);
    for (int t = 0; t < 50; ++t) {
        const auto before = net.state();
        std::vector<std::uint8_t> expected(before.size());
        for (std::size_t i = 0; i < before.size(); ++i)
            expected[i] = net.eval_node(i, before);
        net.step();
        CHECK(net.state() == expected);
    }
}

TEST_CASE("run records the requested window") {
    Rbn net = Rbn::generate(10, 2, 3);
    const auto empty = net.run(0, 0);
    CHECK(empty.rows() == 0);

    Rbn net2 = Rbn::generate(100, 2, 3);
    const auto m = net2.run(10, 25);
    CHECK(m.rows() == 25);
    CHECK(m.cols() == 100);

    // a K=0 network records identical rows after its one-step transient
    Rbn fp = Rbn::generate(12, 0, 9);
    const auto rows = fp.run(1, 5);
    for (std::size_t r = 1; r < rows.rows(); ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c)
            CHECK(rows(r, c) == rows(0, c));
}

TEST_CASE("trajectories are eventually periodic") {
    Rbn net = Rbn::generate(8, 2, 5);
    std::vector<std::vector<std::uint8_t>> seen;
    bool repeated = false;
    for (int t = 0; t < (1 << 8) + 1 && !repeated; ++t) {
        for (const auto& s : seen)
            if (s == net.state()) repeated = true;
        seen.push_back(net.state());
        net.step();
    }
    CHECK(repeated);
}

TEST_CASE("quartiles use linear interpolation") {
    const auto q = quartiles({1.0, 2.0, 3.0, 4.0});
    CHECK(q.min == doctest::Approx(1.0));
    CHECK(q.q1 == doctest::Approx(1.75));
    CHECK(q.median == doctest::Approx(2.5));
    CHECK(q.q3 == doctest::Approx(3.25));
    CHECK(q.max == doctest::Approx(4.0));

    const auto single = quartiles({7.0});
    CHECK(single.min == doctest::Approx(7.0));
    CHECK(single.median == doctest::Approx(7.0));
    CHECK(single.max == doctest::Approx(7.0));
}

TEST_CASE("K=0 ensembles are frozen") {
    const auto stats = measure_ensemble(16, 0, 8, 1, 16, {1}, 2025, 2);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].e.max == doctest::Approx(0.0));
    CHECK(stats[0].h.min == doctest::Approx(1.0));
    CHECK(stats[0].c.max == doctest::Approx(0.0));
}

TEST_CASE("ensemble results are independent of thread count") {
    const auto serial = measure_ensemble(24, 2, 12, 50, 50, {1, 2}, 77, 1);
    const auto parallel = measure_ensemble(24, 2, 12, 50, 50, {1, 2}, 77, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].e.median == parallel[i].e.median);
        CHECK(serial[i].c.q3 == parallel[i].c.q3);
        CHECK(serial[i].h.min == parallel[i].h.min);
    }
}

TEST_CASE("small-scale K trends point the right way") {
    // reduced version of the ensemble protocol: E grows and S falls with K
    double e1 = 0, e4 = 0, h1 = 0;
    {
        const auto s = measure_ensemble(32, 1, 16, 100, 100, {1}, 11, 0);
        e1 = s[0].e.median;
        h1 = s[0].h.median;
    }
    {
        const auto s = measure_ensemble(32, 4, 16, 100, 100, {1}, 11, 0);
        e4 = s[0].e.median;
    }
    CHECK(e1 < e4);
    CHECK(h1 > 0.9);
}

TEST_CASE("coupled autopoiesis is deterministic and sane") {
    const auto a = coupled_autopoiesis(8, 24, {1, 3}, {2}, 3, 100, 100, 99, 1);
    const auto b = coupled_autopoiesis(8, 24, {1, 3}, {2}, 3, 100, 100, 99, 3);
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].k_internal == b[i].k_internal);
        CHECK(a[i].a == b[i].a);
        CHECK(a[i].a >= 0.0);
    }
}
