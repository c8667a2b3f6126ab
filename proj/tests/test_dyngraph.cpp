#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cxm/dyngraph.hpp"

using namespace cxm;

namespace {

using Snap = std::vector<std::set<std::size_t>>;

TemporalGraph chain(std::vector<std::set<std::size_t>> node0_history) {
    // twelve-node graphs where only node 0 evolves
    std::vector<Snap> snaps;
    for (auto& nb : node0_history) {
        Snap snap(12);
        snap[0] = std::move(nb);
        snaps.push_back(std::move(snap));
    }
    return TemporalGraph(std::move(snaps));
}

} // namespace

TEST_CASE("construction validates shape and indices") {
    CHECK_THROWS_AS(TemporalGraph({}), empty_input_error);
    CHECK_THROWS_AS(TemporalGraph(std::vector<Snap>{{{}, {}}, {{}}}),
                    dimension_error);
    CHECK_THROWS_AS(TemporalGraph(std::vector<Snap>{{{5}, {}}}), range_error);

    TemporalGraph g({{{1}, {0}}, {{}, {}}});
    CHECK(g.snapshot_count() == 2);
    CHECK(g.node_count() == 2);
    CHECK(g.neighbors(0, 0) == std::set<std::size_t>{1});
    CHECK_THROWS_AS(g.neighbors(2, 0), range_error);
    CHECK_THROWS_AS(g.neighbors(0, 7), range_error);
}

TEST_CASE("a static neighborhood has zero dynamic degree") {
    auto g = chain({{1}, {1}, {1}, {1}});
    CHECK(temporal_degree(g, 0, 4) == doctest::Approx(0.0));
}

TEST_CASE("dynamic degree on worked examples") {
    // {a,b} -> {b,c}: one lost neighbor over a union of three
    std::vector<Snap> snaps = {{{1, 2}, {}, {}, {}}, {{2, 3}, {}, {}, {}}};
    TemporalGraph g(std::move(snaps));
    CHECK(temporal_degree(g, 0, 2) == doctest::Approx(1.0 / 3.0));

    // full replacement every step: each term is 1/2
    auto h = chain({{1}, {2}, {3}});
    CHECK(temporal_degree(h, 0, 3) == doctest::Approx(1.0));

    // losing everything scores a full unit
    auto k = chain({{1, 2}, {}, {}});
    CHECK(temporal_degree(k, 0, 3) == doctest::Approx(1.0));

    // empty-to-empty transitions contribute nothing
    auto e = chain({{}, {}, {}});
    CHECK(temporal_degree(e, 0, 3) == doctest::Approx(0.0));
}

TEST_CASE("degree windows are additive") {
    auto g = chain({{1}, {1, 2}, {3}, {3}, {0, 3}, {}});
    const double whole = temporal_degree_window(g, 0, 0, 6);
    for (std::size_t k = 1; k < 6; ++k) {
        const double split = temporal_degree_window(g, 0, 0, k) +
                             temporal_degree_window(g, 0, k - 1, 6);
        CHECK(split == doctest::Approx(whole).epsilon(1e-12));
    }
    CHECK_THROWS_AS(temporal_degree_window(g, 0, 4, 2), range_error);
    CHECK_THROWS_AS(temporal_degree_window(g, 0, 0, 9), range_error);
    CHECK_THROWS_AS(temporal_degree(g, 50, 3), range_error);
}

TEST_CASE("dynamic clustering against prior history") {
    // history for horizon 4 is the union of the two interior snapshots
    auto g = chain({{9}, {1, 2}, {3}, {1, 3, 5, 7}});
    CHECK(*temporal_clustering(g, 0, 4) == doctest::Approx(0.5));

    auto persistent = chain({{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    CHECK(*temporal_clustering(persistent, 0, 4) == doctest::Approx(1.0));

    auto newcomers = chain({{1}, {1}, {2}, {5, 6}});
    CHECK(*temporal_clustering(newcomers, 0, 4) == doctest::Approx(0.0));

    // no interior history yet: nothing can have been seen before
    CHECK(*temporal_clustering(persistent, 0, 2) == doctest::Approx(0.0));
}

TEST_CASE("clustering of an empty current neighborhood is undefined") {
    auto g = chain({{1}, {1}, {}});
    CHECK_FALSE(temporal_clustering(g, 0, 3).has_value());
    CHECK_THROWS_AS(temporal_clustering(g, 0, 0), range_error);
    CHECK_THROWS_AS(temporal_clustering(g, 0, 4), range_error);
    CHECK_THROWS_AS(temporal_clustering(g, 90, 2), range_error);
}

TEST_CASE("a growing history can only raise clustering") {
    // final neighborhood fixed; extend interior history one snapshot at a time
    auto g = chain({{0}, {1}, {2}, {3}, {1, 2, 3}});
    // rebuilt graphs that end at the same final snapshot with less history
    auto g3 = chain({{0}, {1}, {1, 2, 3}});
    auto g4 = chain({{0}, {1}, {2}, {1, 2, 3}});
    const double c3 = *temporal_clustering(g3, 0, 3);
    const double c4 = *temporal_clustering(g4, 0, 4);
    const double c5 = *temporal_clustering(g, 0, 5);
    CHECK(c3 <= c4);
    CHECK(c4 <= c5);
    CHECK(c3 == doctest::Approx(1.0 / 3.0));
    CHECK(c4 == doctest::Approx(2.0 / 3.0));
    CHECK(c5 == doctest::Approx(1.0));
}
