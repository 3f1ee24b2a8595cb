#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewcell/cellmod.hpp"
#include "skewcell/seminormal.hpp"

using namespace skewcell;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("standard tableau counts match the hook-length oracle") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& shape : vertices(Family::symmetric, 2 * n))
            CHECK(tableau_count(shape) == oracles::hook_count(shape));
}

TEST_CASE("seminormal matrices are involutions and satisfy the braid relations") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& shape : vertices(Family::symmetric, 2 * n)) {
            SpechtRep rep = seminormal_rep(shape);
            Matrix id = Matrix::identity(rep.dim);
            for (size_t i = 0; i < rep.gen.size(); ++i) {
                CHECK(rep.gen[i] * rep.gen[i] == id);
                if (i + 1 < rep.gen.size())
                    CHECK(rep.gen[i] * rep.gen[i + 1] * rep.gen[i] ==
                          rep.gen[i + 1] * rep.gen[i] * rep.gen[i + 1]);
                for (size_t j = i + 2; j < rep.gen.size(); ++j)
                    CHECK(rep.gen[i] * rep.gen[j] == rep.gen[j] * rep.gen[i]);
            }
        }
}

TEST_CASE("permutation action is a homomorphism") {
    SpechtRep rep = seminormal_rep(P({2, 2}));
    std::mt19937_64 rng(5);
    std::vector<int> sigma{1, 2, 3, 4}, tau{1, 2, 3, 4};
    for (int t = 0; t < 40; ++t) {
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        std::vector<int> comp(4);
        for (int i = 0; i < 4; ++i) comp[i] = sigma[tau[i] - 1];
        CHECK(perm_action(rep, comp) == perm_action(rep, sigma) * perm_action(rep, tau));
    }
}

TEST_CASE("the two-dimensional module sees both signs on one transposition") {
    TowerConfig cfg(Family::symmetric, 0, 6);
    CellModule m = cell_module(cfg, 6, P({2, 1}));
    CHECK(m.dim() == 2);
    Matrix s1 = m.gen_action[0];
    CHECK(s1 * s1 == Matrix::identity(2));
    CHECK(s1.at(0, 0) + s1.at(1, 1) == 0);  // eigenvalues +1 and -1
    CHECK(s1 != Matrix::identity(2));
}

TEST_CASE("frozen cell dimensions") {
    TowerConfig cfg(Family::partition, 4, 4);
    CHECK(cell_module(cfg, 4, P({1})).dim() == 3);
    CHECK(cell_module(cfg, 4, P({})).dim() == 2);
    CHECK_THROWS_AS(cell_module(cfg, 4, P({3})), std::invalid_argument);
}

TEST_CASE("dimension equals path count everywhere at small levels") {
    for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
        int top = f == Family::partition ? 6 : 8;
        TowerConfig cfg(f, default_n(top), top);
        for (int tl = 0; tl <= top; tl += level_step(f)) {
            long square_sum = 0;
            for (const auto& v : vertices(f, tl)) {
                CellModule m = cell_module(cfg, tl, v);
                CHECK(m.dim() == path_count(f, P({}), 0, v, tl));
                square_sum += static_cast<long>(m.dim()) * m.dim();
            }
            CHECK(square_sum == algebra_dimension(cfg, tl));
        }
    }
}

TEST_CASE("identity acts as the identity matrix") {
    TowerConfig cfg(Family::partition, 6, 5);
    for (int tl = 0; tl <= 5; ++tl)
        for (const auto& v : vertices(Family::partition, tl)) {
            CellModule m = cell_module(cfg, tl, v);
            CHECK(diagram_action(m, identity_diagram(tl)) == Matrix::identity(m.dim()));
        }
}

TEST_CASE("representation property, exhaustive and sampled") {
    TowerConfig cfg(Family::partition, 4, 4);
    for (int tl = 0; tl <= 4; ++tl)
        for (const auto& v : vertices(Family::partition, tl)) {
            auto rep = representation_check(cell_module(cfg, tl, v), 0);
            CHECK_MESSAGE(rep.ok, rep.message);
        }
    TowerConfig brauer(Family::brauer, 6, 6);
    auto rep = representation_check(cell_module(brauer, 6, P({1})), 500, 17);
    CHECK_MESSAGE(rep.ok, rep.message);
}

TEST_CASE("restriction") {
    TowerConfig cfg(Family::partition, 4, 4);
    CellModule m = cell_module(cfg, 4, P({1}));
    auto level0 = restrict_action(m, 0);
    REQUIRE(level0.size() == 1);
    CHECK(level0[0] == Matrix::identity(m.dim()));  // only the unit remains
    auto level2 = restrict_action(m, 2);            // P_1 is commutative
    for (const auto& a : level2) {
        CHECK(a.rows == m.dim());
        for (const auto& b : level2) CHECK(a * b == b * a);
    }
    CHECK_THROWS_AS(restrict_action(m, 6), std::invalid_argument);
}

TEST_CASE("invariant form: frozen gram matrices") {
    TowerConfig sym(Family::symmetric, 0, 4);
    CellModule triv = cell_module(sym, 4, P({2}));
    Matrix g = invariant_form(triv).gram;
    REQUIRE(g.rows == 1);
    CHECK(g.at(0, 0) != 0);

    TowerConfig part(Family::partition, 4, 4);
    CellModule empty2 = cell_module(part, 4, P({}));
    Matrix g2 = invariant_form(empty2).gram;
    REQUIRE(g2.rows == 2);
    // basis order: {1}{2} before {1,2}; self-pairings give n^2 and n
    CHECK(g2.at(0, 0) == Rational(16));
    CHECK(g2.at(0, 1) == Rational(4));
    CHECK(g2.at(1, 0) == Rational(4));
    CHECK(g2.at(1, 1) == Rational(4));
    CHECK(rank_of(g2) == 2);
}

TEST_CASE("invariant form: invariance under the involution") {
    for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
        int top = f == Family::partition ? 4 : 6;
        TowerConfig cfg(f, default_n(top), top);
        for (int tl = 0; tl <= top; tl += level_step(f))
            for (const auto& v : vertices(f, tl)) {
                CellModule m = cell_module(cfg, tl, v);
                Matrix gram = invariant_form(m).gram;
                CHECK(gram == gram.transposed());
                CHECK(rank_of(gram) == m.dim());
                for (const auto& gen : enumerate_diagrams(f, tl)) {
                    Matrix a = diagram_action(m, gen);
                    Matrix astar = diagram_action(m, involute(gen));
                    CHECK(a * gram == gram * astar.transposed());
                }
            }
    }
}

TEST_CASE("invariant form matches the intertwiner route up to scale") {
    TowerConfig cfg(Family::partition, 6, 4);
    for (int tl = 2; tl <= 4; ++tl)
        for (const auto& v : vertices(Family::partition, tl)) {
            CellModule m = cell_module(cfg, tl, v);
            Matrix gram = invariant_form(m).gram;
            std::vector<Matrix> lhs = m.gen_action, rhs;
            for (const auto& g : m.gens) rhs.push_back(diagram_action(m, involute(g)).transposed());
            auto sols = hom_space(lhs, rhs, m.dim(), m.dim());
            REQUIRE(sols.size() == 1);
            // proportional: gram * c == solution for the unique scale
            Rational c;
            bool set = false;
            for (int i = 0; i < m.dim() && !set; ++i)
                for (int j = 0; j < m.dim() && !set; ++j)
                    if (sols[0].at(i, j) != 0) {
                        c = gram.at(i, j) / sols[0].at(i, j);
                        set = true;
                    }
            REQUIRE(set);
            CHECK(gram == c * sols[0]);
        }
}

TEST_CASE("module dump is well formed") {
    TowerConfig cfg(Family::partition, 4, 4);
    CellModule m = cell_module(cfg, 4, P({1}));
    auto j = module_json(m);
    CHECK(j["dim"] == 3);
    CHECK(j["basis"].size() == 3);
    CHECK(j["generators"].size() == m.gens.size());
    CHECK(j["action"][0].size() == 3);
    CHECK(j["action"][0][0].size() == 3);
}
