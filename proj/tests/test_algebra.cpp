#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewcell/algebra.hpp"

using namespace skewcell;

namespace {
AlgebraElement diag(const std::string& s, int tl) {
    return AlgebraElement::from_diagram(parse_diagram(s, tl));
}
}  // namespace

TEST_CASE("tower configuration enforces the generic regime") {
    CHECK_NOTHROW(TowerConfig(Family::partition, 4, 4));
    CHECK_THROWS_AS(TowerConfig(Family::partition, 3, 4), std::invalid_argument);
    CHECK_NOTHROW(TowerConfig(Family::symmetric, 0, 8));  // n ignored
    CHECK(default_n(4) == 4);
    CHECK(default_n(5) == 6);
}

TEST_CASE("singleton idempotent squares to n times itself") {
    TowerConfig cfg(Family::partition, 7, 2);
    AlgebraElement e = diag("{1}{1'}", 2);
    CHECK(multiply(e, e, cfg) == Rational(7) * e);
}

TEST_CASE("bilinearity and associativity on random elements") {
    TowerConfig cfg(Family::partition, 4, 4);
    auto basis = enumerate_diagrams(Family::partition, 4);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement x = AlgebraElement::from_diagram(basis[pick(rng)]);
        AlgebraElement y = AlgebraElement::from_diagram(basis[pick(rng)]);
        AlgebraElement z = AlgebraElement::from_diagram(basis[pick(rng)]);
        CHECK(multiply(x + y, z, cfg) == multiply(x, z, cfg) + multiply(y, z, cfg));
        CHECK(multiply(multiply(x, y, cfg), z, cfg) == multiply(x, multiply(y, z, cfg), cfg));
    }
}

TEST_CASE("embedding is unital and multiplicative") {
    TowerConfig cfg2(Family::partition, 4, 2);
    TowerConfig cfg4(Family::partition, 4, 4);
    CHECK(embed(AlgebraElement::unit(2), 2, 4) == AlgebraElement::unit(4));
    AlgebraElement e = diag("{1}{1'}", 2);
    AlgebraElement e4 = embed(e, 2, 4);
    CHECK(multiply(e4, e4, cfg4) == Rational(4) * e4);
    auto basis = enumerate_diagrams(Family::partition, 2);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            AlgebraElement prod = multiply(AlgebraElement::from_diagram(x),
                                           AlgebraElement::from_diagram(y), cfg2);
            CHECK(multiply(embed(AlgebraElement::from_diagram(x), 2, 4),
                           embed(AlgebraElement::from_diagram(y), 2, 4), cfg4) == embed(prod, 2, 4));
        }
    CHECK_THROWS_AS(embed(e, 2, 1), std::invalid_argument);
}

TEST_CASE("top embedding fixes the bottom strands") {
    CHECK(embed_top(AlgebraElement::unit(2), 1, 2) == AlgebraElement::unit(4));
    AlgebraElement e = diag("{1}{1'}", 2);
    CHECK(embed_top(e, 1, 2) == diag("{1,1'}{2}{2'}", 4));
    // the bottom and top copies commute elementwise
    TowerConfig cfg(Family::partition, 4, 4);
    for (const auto& g : generators(Family::partition, 2))
        for (const auto& h : generators(Family::partition, 2)) {
            AlgebraElement bottom = embed(AlgebraElement::from_diagram(g), 2, 4);
            AlgebraElement top = embed_top(AlgebraElement::from_diagram(h), 1, 2);
            CHECK(multiply(bottom, top, cfg) == multiply(top, bottom, cfg));
        }
}

TEST_CASE("algebra dimensions") {
    CHECK(algebra_dimension(TowerConfig(Family::partition, 4, 4), 4) == 15);
    CHECK(algebra_dimension(TowerConfig(Family::brauer, 6, 6), 6) == 15);
    CHECK(algebra_dimension(TowerConfig(Family::symmetric, 0, 6), 6) == 6);
}

TEST_CASE("essential idempotents") {
    TowerConfig p(Family::partition, 6, 4);
    auto [ep, dp] = essential_idempotent(p, 2);
    CHECK(ep == diag("{1}{1'}", 2));
    CHECK(dp == Rational(6));
    CHECK(multiply(ep, ep, p) == dp * ep);
    CHECK(involute(ep) == ep);

    TowerConfig b(Family::brauer, 6, 4);
    auto [eb, db] = essential_idempotent(b, 4);
    CHECK(eb == diag("{1,2}{1',2'}", 4));
    CHECK(db == Rational(6));
    CHECK(multiply(eb, eb, b) == db * eb);
    CHECK(involute(eb) == eb);

    auto [eh, dh] = essential_idempotent(p, 3);
    CHECK(dh == Rational(1));
    CHECK(multiply(eh, eh, p) == eh);

    // the idempotent commutes with everything two half-steps down
    for (Family f : {Family::partition, Family::brauer}) {
        TowerConfig cfg(f, 6, 4);
        for (int tl = (f == Family::partition ? 2 : 4); tl <= 4; tl += level_step(f)) {
            auto [e, delta] = essential_idempotent(cfg, tl);
            for (const auto& d : enumerate_diagrams(f, tl - 2)) {
                AlgebraElement lower = embed(AlgebraElement::from_diagram(d), tl - 2, tl);
                CHECK(multiply(e, lower, cfg) == multiply(lower, e, cfg));
            }
        }
    }
    CHECK_THROWS_AS(essential_idempotent(TowerConfig(Family::symmetric, 0, 4), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(essential_idempotent(b, 2), std::invalid_argument);
}

TEST_CASE("involution reverses products") {
    TowerConfig cfg(Family::partition, 4, 4);
    auto basis = enumerate_diagrams(Family::partition, 4);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement a = AlgebraElement::from_diagram(basis[pick(rng)]);
        AlgebraElement b = AlgebraElement::from_diagram(basis[pick(rng)]);
        CHECK(involute(multiply(a, b, cfg)) == multiply(involute(b), involute(a), cfg));
    }
}

TEST_CASE("generator sets") {
    CHECK(generators(Family::symmetric, 6).size() == 2);
    CHECK(generators(Family::brauer, 6).size() == 4);
    CHECK(generators(Family::partition, 4).size() == 4);   // s1, p1, p2, b1
    CHECK(generators(Family::partition, 5).size() == 5);   // s1, p1, p2, b1, b2 on 3 points
    CHECK(generators(Family::partition, 0).empty());
    CHECK(generators(Family::partition, 1).empty());
    for (const auto& g : generators(Family::partition, 5)) CHECK(is_half_level_member(g));
}
