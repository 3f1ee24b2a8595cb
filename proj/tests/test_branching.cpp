#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewcell/branching.hpp"

using namespace skewcell;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("young edges add one node in descending lexicographic order") {
    CHECK(young_edges(P({})) == std::vector<Partition>{P({1})});
    CHECK(young_edges(P({1})) == std::vector<Partition>{P({2}), P({1, 1})});
    CHECK(young_edges(P({2, 1})) == std::vector<Partition>{P({3, 1}), P({2, 2}), P({2, 1, 1})});
}

TEST_CASE("reflected edges") {
    CHECK(reflected_edges(Family::brauer, 2, P({1})) ==
          std::vector<Partition>{P({2}), P({1, 1}), P({})});
    CHECK(reflected_edges(Family::brauer, 4, P({})) == std::vector<Partition>{P({1})});
    CHECK(reflected_edges(Family::partition, 2, P({1})) == std::vector<Partition>{P({1}), P({})});
    CHECK(reflected_edges(Family::partition, 3, P({1})) ==
          std::vector<Partition>{P({1}), P({2}), P({1, 1})});
    CHECK(reflected_edges(Family::symmetric, 2, P({1})) == std::vector<Partition>{P({2}), P({1, 1})});
    CHECK_THROWS_AS(reflected_edges(Family::brauer, 2, P({2})), std::invalid_argument);
}

TEST_CASE("vertex tables") {
    CHECK(vertices(Family::brauer, 4) == std::vector<Partition>{P({}), P({2}), P({1, 1})});
    CHECK(vertices(Family::partition, 4) == std::vector<Partition>{P({}), P({1}), P({2}), P({1, 1})});
    CHECK(vertices(Family::partition, 3) == std::vector<Partition>{P({}), P({1})});
    CHECK(vertices(Family::symmetric, 6) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
}

TEST_CASE("path counts against hand enumerations and hook lengths") {
    CHECK(path_count(Family::partition, P({}), 0, P({}), 4) == 2);
    CHECK(path_count(Family::symmetric, P({}), 0, P({2, 1}), 6) == 2);
    CHECK(paths(Family::symmetric, P({}), 0, P({2, 1}), 6).size() == 2);
    // standard tableau counts match the hook-length formula
    for (int n = 0; n <= 5; ++n)
        for (const auto& v : vertices(Family::symmetric, 2 * n))
            CHECK(path_count(Family::symmetric, P({}), 0, v, 2 * n) == oracles::hook_count(v));
}

TEST_CASE("path listing between intermediate vertices") {
    auto ps = paths(Family::partition, P({1}), 2, P({1}), 4);
    REQUIRE(ps.size() == 2);
    // emitted in reverse-lexicographic order: the path through the empty
    // partition compares below the path staying at (1)
    CHECK(ps[0].verts == std::vector<Partition>{P({1}), P({}), P({1})});
    CHECK(ps[1].verts == std::vector<Partition>{P({1}), P({1}), P({1})});
}

TEST_CASE("frozen dimension tables for the partition tower") {
    auto t4 = dimension_table(Family::partition, 4);
    CHECK(t4.at(P({})) == 2);
    CHECK(t4.at(P({1})) == 3);
    CHECK(t4.at(P({2})) == 1);
    CHECK(t4.at(P({1, 1})) == 1);
    auto t6 = dimension_table(Family::partition, 6);
    CHECK(t6.at(P({})) == 5);
    CHECK(t6.at(P({1})) == 10);
    CHECK(t6.at(P({2})) == 6);
    CHECK(t6.at(P({1, 1})) == 6);
    CHECK(t6.at(P({3})) == 1);
    CHECK(t6.at(P({2, 1})) == 2);
    CHECK(t6.at(P({1, 1, 1})) == 1);
}

TEST_CASE("squared dimension identity") {
    for (int tl = 0; tl <= 6; ++tl) CHECK(squared_dim_identity(Family::partition, tl));
    for (int tl = 0; tl <= 8; tl += 2) {
        CHECK(squared_dim_identity(Family::brauer, tl));
        CHECK(squared_dim_identity(Family::symmetric, tl));
    }
}

TEST_CASE("path counts are edge-local") {
    for (Family f : {Family::partition, Family::brauer}) {
        int top = f == Family::partition ? 6 : 8;
        for (int tl = level_step(f); tl <= top; tl += level_step(f))
            for (const auto& v : vertices(f, tl)) {
                long direct = path_count(f, P({}), 0, v, tl);
                long local = 0;
                for (const auto& u : vertices(f, tl - level_step(f)))
                    for (const auto& w : reflected_edges(f, tl - level_step(f), u))
                        if (w == v) local += path_count(f, P({}), 0, u, tl - level_step(f));
                CHECK(direct == local);
            }
    }
}

TEST_CASE("path orders") {
    auto ps = paths(Family::symmetric, P({}), 0, P({2, 1}), 6);
    REQUIRE(ps.size() == 2);
    const PathTableau& through_row = ps[1];   // passes (2)
    const PathTableau& through_col = ps[0];   // passes (1,1)
    CHECK(through_row.verts[2] == P({2}));
    CHECK(through_col.verts[2] == P({1, 1}));
    CHECK(dominance_leq(through_col, through_row));
    CHECK_FALSE(dominance_leq(through_row, through_col));
    CHECK(revlex_leq(through_col, through_row));
    CHECK(dominance_leq(through_row, through_row));
    CHECK(revlex_leq(through_row, through_row));

    // dominance refines into revlex, and both are partial orders
    for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
        int tl = f == Family::partition ? 4 : 8;
        for (const auto& v : vertices(f, tl)) {
            auto all = paths(f, P({}), 0, v, tl);
            for (const auto& a : all)
                for (const auto& b : all) {
                    if (dominance_leq(a, b)) CHECK(revlex_leq(a, b));
                    if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                    if (revlex_leq(a, b) && revlex_leq(b, a)) CHECK(a == b);
                }
        }
    }
    PathTableau other = ps[0];
    other.verts.back() = P({3});
    CHECK_THROWS_AS(dominance_leq(ps[0], other), std::invalid_argument);
}

TEST_CASE("partition text forms") {
    CHECK(P({2, 1}).str() == "2,1");
    CHECK(P({}).str() == "[]");
    CHECK(parse_partition("2,1") == P({2, 1}));
    CHECK(parse_partition("") == P({}));
    CHECK(parse_partition("[]") == P({}));
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
}

TEST_CASE("graph export shape") {
    auto g = graph_json(Family::partition, 2);
    REQUIRE(g.size() == 3);
    CHECK(g[0]["level"] == 0);
    CHECK(g[1]["level"] == 0.5);
    CHECK(g[2]["level"] == 1);
    CHECK(g[2]["vertices"] == nlohmann::json::array({"[]", "1"}));
}
