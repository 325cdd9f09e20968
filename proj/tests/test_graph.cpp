#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aalpha/graph.hpp"
#include "aalpha/rng.hpp"
#include "oracles.hpp"

using namespace aalpha;

TEST_CASE("complete graphs") {
    CHECK(complete(1).edgeCount() == 0);
    Graph k4 = complete(4);
    CHECK(k4.edgeCount() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(diameter(complete(5)) == 1);
    CHECK_THROWS_AS(complete(0), InvalidInputError);
    CHECK_THROWS_AS(complete(65), UnsupportedError);
}

TEST_CASE("sequential joins") {
    Graph g = sequentialJoin(JoinSpec{1, 2, 1});
    CHECK(g.n() == 4);
    CHECK(g.edgeCount() == 5);  // K4 minus the end-to-end edge
    CHECK_FALSE(g.hasEdge(0, 3));

    CHECK(sequentialJoin(JoinSpec{1, 1, 1, 1}) == path(4));

    Graph h = sequentialJoin(JoinSpec{1, 2, 2, 1});
    CHECK(diameter(h) == 3);
    CHECK(oracle::diameterByBfs(h) == 3);

    CHECK_THROWS_AS(sequentialJoin(JoinSpec{}), InvalidInputError);
    CHECK_THROWS_AS(sequentialJoin(JoinSpec{2, 0, 1}), InvalidInputError);

    // edge count: sum of in-cell cliques plus consecutive-cell bicliques
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        int cells = rng.range(1, 5);
        std::vector<int> parts;
        for (int c = 0; c < cells; ++c) parts.push_back(rng.range(1, 4));
        JoinSpec spec{std::vector<int>(parts)};
        long expect = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            expect += static_cast<long>(parts[i]) * (parts[i] - 1) / 2;
            if (i + 1 < parts.size()) expect += static_cast<long>(parts[i]) * parts[i + 1];
        }
        CHECK(sequentialJoin(spec).edgeCount() == expect);
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(complete(1)) == 0);
    CHECK(diameter(complete(7)) == 1);
    CHECK(diameter(path(5)) == 4);
    for (int d = 1; d <= 6; ++d) {
        std::vector<int> parts(static_cast<std::size_t>(d) + 1, 2);
        parts.front() = parts.back() = 1;
        Graph g = sequentialJoin(JoinSpec{std::move(parts)});
        CHECK(diameter(g) == d);
        CHECK(oracle::diameterByBfs(g) == d);
    }
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(diameter(disconnected).has_value());
}

TEST_CASE("k-connectivity") {
    CHECK(isKConnected(complete(5), 4));
    CHECK_FALSE(isKConnected(path(4), 2));
    CHECK(isKConnected(oracle::cycleGraph(6), 2));
    CHECK_THROWS_AS(isKConnected(complete(5), 5), InvalidInputError);
    CHECK_THROWS_AS(isKConnected(complete(5), 0), InvalidInputError);
    CHECK_THROWS_AS(isKConnected(complete(13) /* n>12 */, 2), UnsupportedError);

    SUBCASE("matches max-flow vertex connectivity") {
        Rng rng(42);
        for (int t = 0; t < 40; ++t) {
            int n = rng.range(3, 8);
            Graph g = oracle::randomConnectedGraph(rng, n, 0.2 + 0.6 * rng.unit());
            int kappa = oracle::mengerConnectivity(g);
            for (int k = 1; k < n; ++k) CHECK(isKConnected(g, k) == (kappa >= k));
        }
    }

    SUBCASE("unit-end joins with interior cells >= k are k-connected with diameter d") {
        Rng rng(7);
        for (int t = 0; t < 25; ++t) {
            int k = rng.range(2, 3);
            int d = rng.range(2, 4);
            std::vector<int> parts(static_cast<std::size_t>(d) + 1);
            parts.front() = parts.back() = 1;
            int order = 2;
            for (int i = 1; i < d; ++i) {
                parts[i] = k + static_cast<int>(rng.below(3));
                order += parts[i];
            }
            if (order > 12) continue;
            Graph g = sequentialJoin(JoinSpec{std::move(parts)});
            CHECK(isKConnected(g, k));
            CHECK(diameter(g) == d);
        }
    }
}

TEST_CASE("edge shifts") {
    SUBCASE("path becomes a star") {
        Graph p4 = path(4);  // 0-1-2-3
        Graph shifted = applyShift(p4, ShiftMove::of({2}, {1}, {3}));
        CHECK(shifted == Graph(4, {{0, 1}, {1, 2}, {1, 3}}));  // K_{1,3} centered at 1
    }
    SUBCASE("empty moved set is rejected") {
        CHECK_THROWS_AS(applyShift(path(4), ShiftMove::of({2}, {1}, {})), InvalidInputError);
    }
    SUBCASE("violated preconditions name the offending pair") {
        // (0,3) is not an edge of P4, so U={0}, W={3} is invalid
        CHECK_THROWS_WITH_AS(applyShift(path(4), ShiftMove::of({0}, {1}, {3})),
                             doctest::Contains("missing edge (0,3)"), InvalidInputError);
        // (1,2) is an edge, so target V={1} with W={2} is invalid
        CHECK_THROWS_WITH_AS(applyShift(path(4), ShiftMove::of({3}, {1}, {2})),
                             doctest::Contains("already present (1,2)"), InvalidInputError);
        CHECK_THROWS_AS(applyShift(path(4), ShiftMove::of({1}, {1}, {3})), InvalidInputError);
        CHECK_THROWS_AS(applyShift(path(4), ShiftMove::of({0, 1}, {2}, {3})), InvalidInputError);
    }
    SUBCASE("block move between join cells") {
        // cells: {0},{1,2},{3,4},{5,6},{7}; move the cell3-cell4 edges to cell1-cell4
        Graph g = sequentialJoin(JoinSpec{1, 2, 2, 2, 1});
        Graph shifted = applyShift(g, ShiftMove::of({5, 6}, {1, 2}, {7}));
        Graph::Builder b(8);
        for (auto [u, v] : g.edges())
            if (!(v == 7)) b.addEdge(u, v);
        b.addEdge(1, 7).addEdge(2, 7);
        CHECK(shifted == b.build());
        CHECK(shifted.n() == g.n());
        CHECK(shifted.edgeCount() == g.edgeCount());  // |U| = |V|
    }
    SUBCASE("edge count changes by (|V|-|U|)|W| = 0 on random block moves") {
        Rng rng(99);
        for (int t = 0; t < 30; ++t) {
            Graph g = sequentialJoin(JoinSpec{1, 2, 3, 2, 1});
            int s = rng.range(1, 2);
            std::vector<int> u, v, w;
            for (int i = 0; i < s; ++i) u.push_back(6 + i);  // cell 3
            for (int i = 0; i < s; ++i) v.push_back(1 + i);  // cell 1
            w.push_back(8);                                  // cell 4
            Graph shifted = applyShift(g, ShiftMove::of(u, v, w));
            CHECK(shifted.edgeCount() == g.edgeCount());
            CHECK(shifted.n() == g.n());
        }
    }
}

TEST_CASE("graph6 round trips and frozen encodings") {
    CHECK(emitGraph6(complete(1)) == "@");
    CHECK(emitGraph6(complete(4)) == "C~");
    CHECK(emitGraph6(complete(5)) == "D~{");
    CHECK(emitGraph6(path(4)) == "Ch");
    CHECK(emitGraph6(oracle::star(3)) == "Cs");
    CHECK(emitGraph6(oracle::cycleGraph(4)) == "Cl");

    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        int n = rng.range(1, 20);
        Graph g = t % 2 ? oracle::randomConnectedGraph(rng, std::max(n, 2), rng.unit())
                        : Graph::fromEdgeMask(std::min(n, 10),
                                              rng.next() & ((1u << 20) - 1));
        CHECK(parseGraph6(emitGraph6(g)) == g);
    }

    SUBCASE("parse errors carry byte offsets") {
        CHECK_THROWS_AS(parseGraph6(""), ParseError);
        CHECK_THROWS_AS(parseGraph6("D~"), ParseError);       // truncated body
        CHECK_THROWS_AS(parseGraph6("D~{{"), ParseError);     // trailing byte
        CHECK_THROWS_AS(parseGraph6(std::string("C") + char(62) + "~~"), ParseError);
        bool threw = false;
        try {
            parseGraph6(std::string("C") + char(0x20));
        } catch (const ParseError& e) {
            threw = true;
            CHECK(e.offset() == 1);
        }
        CHECK(threw);
        // n=2 with a nonzero padding bit
        CHECK_THROWS_AS(parseGraph6("A~"), ParseError);
        CHECK_THROWS_AS(parseGraph6("~??"), UnsupportedError);  // long form
        CHECK_THROWS_AS(emitGraph6(complete(63)), UnsupportedError);
    }
}

TEST_CASE("edge list text round trip") {
    Graph g = sequentialJoin(JoinSpec{1, 3, 1});
    std::string text = emitEdgeList(g);
    std::istringstream in(text);
    CHECK(parseEdgeList(in) == g);

    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(parseEdgeList(bad), ParseError);
}

TEST_CASE("isomorphism") {
    Rng rng(3);
    SUBCASE("relabelings are isomorphic") {
        for (int t = 0; t < 20; ++t) {
            int n = rng.range(2, 9);
            Graph g = oracle::randomConnectedGraph(rng, n, rng.unit());
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
            CHECK(areIsomorphic(g, oracle::relabel(g, perm)));
        }
    }
    SUBCASE("basic distinctions") {
        CHECK(areIsomorphic(path(4), oracle::relabel(path(4), {3, 1, 0, 2})));
        CHECK_FALSE(areIsomorphic(oracle::cycleGraph(4), path(4)));
        // equal degree sequence, different structure
        CHECK_FALSE(areIsomorphic(sequentialJoin(JoinSpec{1, 4, 2, 1}),
                                  sequentialJoin(JoinSpec{1, 3, 3, 1})));
        // C6 vs two triangles: same degrees, different connectivity
        Graph twoTriangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        CHECK_FALSE(areIsomorphic(oracle::cycleGraph(6), twoTriangles));
    }
    SUBCASE("reversing a join composition relabels the same graph") {
        CHECK(areIsomorphic(sequentialJoin(JoinSpec{1, 4, 2, 1}),
                            sequentialJoin(JoinSpec{1, 2, 4, 1})));
    }
    SUBCASE("size guard") {
        CHECK_THROWS_AS(areIsomorphic(complete(13), complete(13)), UnsupportedError);
    }
}
