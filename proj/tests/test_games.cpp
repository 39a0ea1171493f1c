#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "tdhom/counterexample.hpp"
#include "tdhom/enumerate.hpp"
#include "tdhom/games.hpp"

using namespace tdhom;

TEST_CASE("ck_equivalent: reflexivity, order mismatch, bad init") {
    const Graph p4 = oracle::path(4);
    for (int k = 1; k <= 3; ++k) CHECK(ck_equivalent(p4, p4, k));

    CHECK(!ck_equivalent(oracle::complete(1), oracle::edgeless(2), 1));
    CHECK(!ck_equivalent(oracle::complete(3), oracle::complete(4), 2));

    // differently colored initial pins lose immediately
    const ColorPalette pal = oracle::duo();
    const Graph wb(pal, {0, 1}, {});
    CHECK(!ck_equivalent(wb, wb, 1, {0}, {1}));
    CHECK(ck_equivalent(wb, wb, 1, {0}, {0}));

    CHECK_THROWS_AS(ck_equivalent(p4, p4, 0), input_error);
    CHECK_THROWS_AS(ck_equivalent(p4, p4, 1, {0}, {0, 1}), input_error);
    CHECK_THROWS_AS(ck_equivalent(p4, p4, 1, {9}, {0}), input_error);
    CHECK_THROWS_AS(ck_equivalent(p4, Graph(pal, {0, 0, 0, 0}, {}), 1), input_error);
}

TEST_CASE("ck_equivalent: six-cycle vs two triangles flips between rounds 2 and 3") {
    const Graph c6 = oracle::cycle(6);
    const Graph tt = disjoint_union({oracle::complete(3), oracle::complete(3)});
    CHECK(ck_equivalent(c6, tt, 1));
    CHECK(ck_equivalent(c6, tt, 2));
    CHECK(!ck_equivalent(c6, tt, 3));
}

TEST_CASE("ck_equivalent: matches the exhaustive bijection-game oracle") {
    const auto graphs = enum_graphs(4, oracle::mono());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            const Graph& a = graphs[i];
            const Graph& b = graphs[j];
            for (int k = 1; k <= 3; ++k) {
                if (a.order() != b.order()) {
                    CHECK(!ck_equivalent(a, b, k));
                    continue;
                }
                CHECK(ck_equivalent(a, b, k) == oracle::game_equivalent(a, b, k));
            }
            // seated positions, one round
            if (a.order() == b.order())
                for (int v = 0; v < a.order(); ++v)
                    for (int w = 0; w < b.order(); ++w)
                        CHECK(ck_equivalent(a, b, 1, {v}, {w}) ==
                              oracle::game_equivalent(a, b, 1, {v}, {w}));
        }
}

TEST_CASE("ck_equivalent: monotone in the number of rounds") {
    const auto graphs = enum_graphs(4, oracle::duo());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            if (graphs[i].order() != graphs[j].order()) continue;
            for (int k = 1; k <= 2; ++k)
                if (ck_equivalent(graphs[i], graphs[j], k + 1))
                    CHECK(ck_equivalent(graphs[i], graphs[j], k));
        }
}

TEST_CASE("ck_equivalent: one round sees exactly the color multiset") {
    const auto graphs = enum_graphs(4, oracle::duo());
    for (const Graph& a : graphs)
        for (const Graph& b : graphs) {
            if (a.order() != b.order()) continue;
            std::map<int, int> ca, cb;
            for (int v = 0; v < a.order(); ++v) ++ca[a.color(v)];
            for (int v = 0; v < b.order(); ++v) ++cb[b.color(v)];
            CHECK(ck_equivalent(a, b, 1) == (ca == cb));
        }
}

TEST_CASE("ck_partitions: ladder shape and mirrored classes on equal graphs") {
    const Graph p3 = oracle::path(3);
    const auto ladder = ck_partitions(p3, p3, 2);
    REQUIRE(ladder.size() == 3);
    for (int j = 0; j <= 2; ++j) {
        CHECK(ladder[static_cast<std::size_t>(j)].tuple_length == 2 - j);
        CHECK(ladder[static_cast<std::size_t>(j)].left_classes ==
              ladder[static_cast<std::size_t>(j)].right_classes);
        CHECK(ladder[static_cast<std::size_t>(j)].num_classes >= 1);
    }
    // round 0 on 2-tuples of P_3: (end,end) pairs split from (end,center)
    CHECK(ladder[0].left_classes.size() == 9);
    CHECK(ladder[2].left_classes.size() == 1);

    CHECK_THROWS_AS(ck_partitions(p3, p3, 0), input_error);
    CHECK_THROWS_AS(ck_partitions(p3, oracle::path(4), 1), input_error);
}

TEST_CASE("fo_equivalent: classic game without the bijection rule") {
    const Graph p4 = oracle::path(4);
    CHECK(fo_equivalent(p4, p4, 3));

    // one white vertex vs two: one round cannot tell them apart
    const Graph one = oracle::complete(1);
    const Graph two = oracle::edgeless(2);
    CHECK(fo_equivalent(one, two, 1));
    CHECK(!fo_equivalent(one, two, 2));
    CHECK(fo_equivalent(one, two, 0));

    const StarPair pair = build_star_pair(1);
    CHECK(!fo_equivalent(pair.g, pair.g2, 2));

    CHECK_THROWS_AS(fo_equivalent(p4, p4, -1), input_error);
}

TEST_CASE("fo_equivalent: implied by the bijective game at the same depth") {
    const auto graphs = enum_graphs(3, oracle::duo());
    for (const Graph& a : graphs)
        for (const Graph& b : graphs) {
            if (a.order() != b.order()) continue;
            for (int k = 1; k <= 2; ++k)
                if (ck_equivalent(a, b, k)) CHECK(fo_equivalent(a, b, k));
        }
}

TEST_CASE("ck_equivalent: seated game matches the deletion quotient") {
    const Graph c5 = oracle::cycle(5);
    const Graph p5 = oracle::path(5);
    for (int k = 1; k <= 3; ++k)
        for (int v = 0; v < 5; ++v)
            for (int w = 0; w < 5; ++w)
                CHECK(ck_equivalent(c5, p5, k, {v}, {w}) ==
                      ck_equivalent(quotient_delete(c5, v), quotient_delete(p5, w), k));
}
