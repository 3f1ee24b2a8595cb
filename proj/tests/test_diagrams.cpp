#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewcell/diagrams.hpp"

using namespace skewcell;

TEST_CASE("compose counts closed middle components") {
    auto e = parse_diagram("{1}{1'}", 2);
    auto r = compose(e, e);
    CHECK(r.loops == 1);
    CHECK(r.diagram == e);
}

TEST_CASE("identity is neutral for composition") {
    auto id2 = identity_diagram(4);
    for (const auto& d : enumerate_diagrams(Family::partition, 4)) {
        auto l = compose(id2, d);
        auto r = compose(d, id2);
        CHECK(l.loops == 0);
        CHECK(l.diagram == d);
        CHECK(r.loops == 0);
        CHECK(r.diagram == d);
    }
}

TEST_CASE("a transposition squares to the identity") {
    auto s = parse_diagram("{1,2'}{2,1'}", 4);
    auto r = compose(s, s);
    CHECK(r.loops == 0);
    CHECK(r.diagram == identity_diagram(4));
}

TEST_CASE("involution flips bars") {
    CHECK(involute(identity_diagram(6)) == identity_diagram(6));
    auto d = parse_diagram("{1,2,1'}{2'}", 4);
    CHECK(involute(d) == parse_diagram("{1,1',2'}{2}", 4));
    CHECK(involute(involute(d)) == d);
}

TEST_CASE("eight strand example: five blocks, three propagating") {
    // d = {1bar 2bar 4bar 2 5}{3bar}{5bar 6bar 7bar 3 4 6 7}{8bar 8}{1}
    auto d = parse_diagram("{2,5,1',2',4'}{3'}{3,4,6,7,5',6',7'}{8,8'}{1}", 16);
    CHECK(d.blocks.size() == 5);
    CHECK(propagating_number(d) == 3);
    CHECK(involute(involute(d)) == d);
}

TEST_CASE("propagating number extremes") {
    CHECK(propagating_number(identity_diagram(8)) == 4);
    std::vector<std::vector<int>> singletons;
    for (int p = 1; p <= 6; ++p) singletons.push_back({p});
    CHECK(propagating_number(make_diagram(6, singletons)) == 0);
}

TEST_CASE("enumeration counts match the classical sequences") {
    CHECK(enumerate_diagrams(Family::partition, 2).size() == 2);
    CHECK(enumerate_diagrams(Family::partition, 4).size() == 15);
    for (Family f : {Family::partition, Family::brauer, Family::symmetric})
        CHECK(enumerate_diagrams(f, 0).size() == 1);
    for (int tl = 0; tl <= 6; ++tl)
        CHECK(static_cast<long>(enumerate_diagrams(Family::partition, tl).size()) == oracles::bell(tl));
    for (int k = 0; k <= 4; ++k) {
        CHECK(static_cast<long>(enumerate_diagrams(Family::brauer, 2 * k).size()) ==
              oracles::double_factorial(2 * k - 1));
        CHECK(static_cast<long>(enumerate_diagrams(Family::symmetric, 2 * k).size()) ==
              oracles::factorial(k));
    }
}

TEST_CASE("enumeration is canonical and duplicate-free") {
    for (int tl : {3, 4, 5}) {
        auto all = enumerate_diagrams(Family::partition, tl);
        for (size_t i = 0; i < all.size(); ++i) {
            validate_diagram(all[i]);
            if (i) CHECK(all[i - 1] < all[i]);
            CHECK(parse_diagram(diagram_str(all[i]), tl) == all[i]);
        }
    }
}

TEST_CASE("family predicates") {
    for (const auto& d : enumerate_diagrams(Family::brauer, 6)) CHECK(is_brauer_diagram(d));
    for (const auto& d : enumerate_diagrams(Family::symmetric, 6)) {
        CHECK(is_permutation_diagram(d));
        CHECK(is_brauer_diagram(d));
    }
    for (const auto& d : enumerate_diagrams(Family::partition, 3)) CHECK(is_half_level_member(d));
}

TEST_CASE("involution is an anti-homomorphism for composition") {
    for (int tl : {2, 4}) {
        auto basis = enumerate_diagrams(Family::partition, tl);
        for (const auto& x : basis)
            for (const auto& y : basis) {
                auto xy = compose(x, y);
                auto yx = compose(involute(y), involute(x));
                CHECK(involute(xy.diagram) == yx.diagram);
                CHECK(xy.loops == yx.loops);
            }
    }
    auto basis = enumerate_diagrams(Family::partition, 6);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 500; ++t) {
        const auto& x = basis[pick(rng)];
        const auto& y = basis[pick(rng)];
        auto xy = compose(x, y);
        auto yx = compose(involute(y), involute(x));
        CHECK(involute(xy.diagram) == yx.diagram);
        CHECK(xy.loops == yx.loops);
    }
}

TEST_CASE("propagating number cannot grow under composition") {
    auto basis = enumerate_diagrams(Family::partition, 4);
    for (const auto& x : basis)
        for (const auto& y : basis)
            CHECK(propagating_number(compose(x, y).diagram) <=
                  std::min(propagating_number(x), propagating_number(y)));
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(enumerate_diagrams(Family::brauer, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_diagrams(Family::symmetric, 5), std::invalid_argument);
    CHECK_THROWS_AS(compose(identity_diagram(2), identity_diagram(4)), std::invalid_argument);
    CHECK_THROWS_AS(make_diagram(6, {{1, 2, 3, 4}}), std::invalid_argument);      // missing points
    CHECK_THROWS_AS(make_diagram(2, {{1, 2}, {2, 1}}), std::invalid_argument);    // repeated points
    CHECK_THROWS_AS(parse_diagram("{1}{2}{1'}{2'}", 3), std::invalid_argument);   // half level split
}
