#include "skewcell/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "skewcell/algebra.hpp"
#include "skewcell/branching.hpp"
#include "skewcell/cellmod.hpp"
#include "skewcell/diagrams.hpp"
#include "skewcell/kronecker.hpp"
#include "skewcell/seminormal.hpp"
#include "skewcell/skew.hpp"

namespace skewcell {

namespace {

long bell_number(int n) {
    // Bell triangle
    std::vector<std::vector<long>> tri{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> row{tri.back().back()};
        for (long x : tri.back()) row.push_back(row.back() + x);
        tri.push_back(std::move(row));
    }
    return tri[n][0];
}

long double_factorial(int n) {
    long r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

long factorial(int n) {
    long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

struct Suite {
    VerifyReport report;
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        report.lines.push_back({name, pass, detail});
    }
};

VerifyReport verify_diagrams(const VerifyOptions& opts) {
    Suite s;
    s.report.suite = "diagrams";
    int max_level = opts.max_level > 0 ? opts.max_level : 3;

    {  // canonical form is stable under re-canonicalization
        bool ok = true;
        long count = 0;
        for (int tl = 0; tl <= 2 * std::min(max_level, 2); ++tl) {
            for (const auto& d : enumerate_diagrams(Family::partition, tl)) {
                validate_diagram(d);
                std::vector<std::vector<int>> blocks;
                int k = d.npoints();
                for (uint32_t b : d.blocks) {
                    std::vector<int> blk;
                    for (int p = 0; p < 2 * k; ++p)
                        if (b & (1u << p)) blk.push_back(p + 1);
                    blocks.push_back(blk);
                }
                if (!(make_diagram(tl, blocks) == d)) ok = false;
                ++count;
            }
        }
        s.check("canonical-form", ok, std::to_string(count) + " diagrams");
    }
    {  // involution is an anti-homomorphism for compose
        bool ok = true;
        long count = 0;
        for (int tl = 2; tl <= 4; tl += 2) {
            auto basis = enumerate_diagrams(Family::partition, tl);
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    auto xy = compose(x, y);
                    auto yx = compose(involute(y), involute(x));
                    if (!(involute(xy.diagram) == yx.diagram) || xy.loops != yx.loops) ok = false;
                    ++count;
                }
        }
        if (max_level >= 3) {
            auto basis = enumerate_diagrams(Family::partition, 6);
            std::mt19937_64 rng(opts.seed);
            std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
            for (int t = 0; t < 500; ++t) {
                const auto& x = basis[pick(rng)];
                const auto& y = basis[pick(rng)];
                auto xy = compose(x, y);
                auto yx = compose(involute(y), involute(x));
                if (!(involute(xy.diagram) == yx.diagram) || xy.loops != yx.loops) ok = false;
                ++count;
            }
        }
        s.check("involution-anti-homomorphism", ok, std::to_string(count) + " pairs");
    }
    {  // propagating number cannot grow under composition
        bool ok = true;
        long count = 0;
        auto basis = enumerate_diagrams(Family::partition, 4);
        for (const auto& x : basis)
            for (const auto& y : basis) {
                if (propagating_number(compose(x, y).diagram) >
                    std::min(propagating_number(x), propagating_number(y)))
                    ok = false;
                ++count;
            }
        s.check("propagating-monotone", ok, std::to_string(count) + " pairs");
    }
    {  // basis sizes
        bool ok = true;
        std::ostringstream detail;
        for (int k = 0; k <= std::min(max_level, 3); ++k) {
            long p = static_cast<long>(enumerate_diagrams(Family::partition, 2 * k).size());
            long b = static_cast<long>(enumerate_diagrams(Family::brauer, 2 * k).size());
            long sy = static_cast<long>(enumerate_diagrams(Family::symmetric, 2 * k).size());
            if (p != bell_number(2 * k) || b != double_factorial(2 * k - 1) || sy != factorial(k)) ok = false;
            detail << "k=" << k << ":" << p << "/" << b << "/" << sy << " ";
        }
        s.check("basis-counts", ok, detail.str());
    }
    return s.report;
}

VerifyReport verify_algebra(const VerifyOptions& opts) {
    Suite s;
    s.report.suite = "algebra";
    int max_level = opts.max_level > 0 ? opts.max_level : 3;
    TowerConfig cfg(Family::partition, default_n(6), 6);

    {  // associativity and unitality
        bool ok = true;
        long count = 0;
        auto basis = enumerate_diagrams(Family::partition, 4);
        AlgebraElement one = AlgebraElement::unit(4);
        for (const auto& d : basis) {
            AlgebraElement e = AlgebraElement::from_diagram(d);
            if (multiply(one, e, cfg) != e || multiply(e, one, cfg) != e) ok = false;
        }
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        for (int t = 0; t < 200; ++t) {
            AlgebraElement a = AlgebraElement::from_diagram(basis[pick(rng)]);
            AlgebraElement b = AlgebraElement::from_diagram(basis[pick(rng)]);
            AlgebraElement c = AlgebraElement::from_diagram(basis[pick(rng)]);
            if (multiply(multiply(a, b, cfg), c, cfg) != multiply(a, multiply(b, c, cfg), cfg)) ok = false;
            ++count;
        }
        if (max_level >= 3) {
            auto big = enumerate_diagrams(Family::partition, 6);
            std::uniform_int_distribution<size_t> pick6(0, big.size() - 1);
            for (int t = 0; t < 100; ++t) {
                AlgebraElement a = AlgebraElement::from_diagram(big[pick6(rng)]);
                AlgebraElement b = AlgebraElement::from_diagram(big[pick6(rng)]);
                AlgebraElement c = AlgebraElement::from_diagram(big[pick6(rng)]);
                if (multiply(multiply(a, b, cfg), c, cfg) != multiply(a, multiply(b, c, cfg), cfg))
                    ok = false;
                ++count;
            }
        }
        s.check("associative-unital", ok, std::to_string(count) + " triples");
    }
    {  // involution is an algebra anti-automorphism
        bool ok = true;
        auto basis = enumerate_diagrams(Family::partition, 4);
        std::mt19937_64 rng(opts.seed + 1);
        std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
        for (int t = 0; t < 300; ++t) {
            AlgebraElement a = AlgebraElement::from_diagram(basis[pick(rng)]);
            AlgebraElement b = AlgebraElement::from_diagram(basis[pick(rng)]);
            if (involute(multiply(a, b, cfg)) != multiply(involute(b), involute(a), cfg)) ok = false;
        }
        s.check("involution-anti-automorphism", ok, "300 pairs");
    }
    {  // embeddings are injective and multiplicative
        bool ok = true;
        auto basis = enumerate_diagrams(Family::partition, 2);
        for (const auto& x : basis)
            for (const auto& y : basis) {
                AlgebraElement ex = embed(AlgebraElement::from_diagram(x), 2, 4);
                AlgebraElement ey = embed(AlgebraElement::from_diagram(y), 2, 4);
                AlgebraElement lhs = multiply(ex, ey, cfg);
                AlgebraElement prod = multiply(AlgebraElement::from_diagram(x),
                                               AlgebraElement::from_diagram(y),
                                               TowerConfig(Family::partition, cfg.n, 2));
                if (lhs != embed(prod, 2, 4)) ok = false;
                if (!(x == y) && embed_diagram(x, 4) == embed_diagram(y, 4)) ok = false;
                AlgebraElement tx = embed_top(AlgebraElement::from_diagram(x), 1, 2);
                AlgebraElement ty = embed_top(AlgebraElement::from_diagram(y), 1, 2);
                if (multiply(tx, ty, cfg) != embed_top(prod, 1, 2)) ok = false;
            }
        s.check("embeddings-multiplicative", ok, std::to_string(basis.size() * basis.size()) + " pairs");
    }
    {  // essential idempotents
        bool ok = true;
        for (Family f : {Family::partition, Family::brauer}) {
            int lo = (f == Family::partition) ? 2 : 4;
            for (int tl = lo; tl <= 4; tl += (f == Family::partition ? 1 : 2)) {
                TowerConfig c(f, default_n(4), 4);
                auto [e, delta] = essential_idempotent(c, tl);
                if (multiply(e, e, c) != delta * e) ok = false;
                if (involute(e) != e) ok = false;
                if (tl >= 2) {
                    for (const auto& d : enumerate_diagrams(f, tl - 2)) {
                        AlgebraElement lower = embed(AlgebraElement::from_diagram(d), tl - 2, tl);
                        if (multiply(e, lower, c) != multiply(lower, e, c)) ok = false;
                    }
                }
            }
        }
        s.check("essential-idempotents", ok, "partition tl 2..4, brauer tl 4");
    }
    return s.report;
}

VerifyReport verify_branching(const VerifyOptions& opts) {
    Suite s;
    s.report.suite = "branching";
    int max_level = opts.max_level > 0 ? opts.max_level : 3;

    {
        bool ok = true;
        std::ostringstream detail;
        for (int tl = 0; tl <= 2 * std::min(max_level, 3); ++tl)
            if (!squared_dim_identity(Family::partition, tl)) ok = false;
        for (int tl = 0; tl <= 8; tl += 2) {
            if (!squared_dim_identity(Family::brauer, tl)) ok = false;
            if (!squared_dim_identity(Family::symmetric, tl)) ok = false;
        }
        s.check("squared-dimension-identity", ok, "partition tl<=6, brauer/symmetric tl<=8");
    }
    {  // path counts are edge-local
        bool ok = true;
        for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
            int top = (f == Family::partition) ? 2 * std::min(max_level, 3) : 8;
            for (int tl = level_step(f); tl <= top; tl += level_step(f)) {
                for (const auto& v : vertices(f, tl)) {
                    long direct = path_count(f, Partition{}, 0, v, tl);
                    long local = 0;
                    for (const auto& u : vertices(f, tl - level_step(f)))
                        for (const auto& w : reflected_edges(f, tl - level_step(f), u))
                            if (w == v) local += path_count(f, Partition{}, 0, u, tl - level_step(f));
                    if (direct != local) ok = false;
                }
            }
        }
        s.check("path-counts-edge-local", ok);
    }
    {  // both orders are partial orders; dominance refines revlex
        bool ok = true;
        long pairs = 0;
        for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
            int tl = (f == Family::partition) ? 4 : 8;
            for (const auto& v : vertices(f, tl)) {
                auto ps = paths(f, Partition{}, 0, v, tl);
                for (const auto& a : ps)
                    for (const auto& b : ps) {
                        bool dab = dominance_leq(a, b), dba = dominance_leq(b, a);
                        bool rab = revlex_leq(a, b), rba = revlex_leq(b, a);
                        if (a == b && (!dab || !rab)) ok = false;
                        if (!(a == b) && ((dab && dba) || (rab && rba))) ok = false;
                        if (dab && !rab) ok = false;  // coarsening claim
                        for (const auto& c : ps) {
                            if (dab && dominance_leq(b, c) && !dominance_leq(a, c)) ok = false;
                            if (rab && revlex_leq(b, c) && !revlex_leq(a, c)) ok = false;
                        }
                        ++pairs;
                    }
            }
        }
        s.check("path-orders", ok, std::to_string(pairs) + " pairs");
    }
    return s.report;
}

VerifyReport verify_cellmod(const VerifyOptions& opts) {
    Suite s;
    s.report.suite = "cellmod";
    int max_level = opts.max_level > 0 ? opts.max_level : 3;

    {  // dim = path count, and sum of squares = algebra dimension
        bool ok = true;
        for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
            int top = (f == Family::partition) ? 2 * std::min(max_level, 3) : 8;
            for (int tl = 0; tl <= top; tl += level_step(f)) {
                TowerConfig cfg(f, default_n(top), top);
                long sq = 0;
                for (const auto& v : vertices(f, tl)) {
                    CellModule m = cell_module(cfg, tl, v);
                    long expect = path_count(f, Partition{}, 0, v, tl);
                    if (m.dim() != expect) ok = false;
                    sq += static_cast<long>(m.dim()) * m.dim();
                }
                if (sq != algebra_dimension(cfg, tl)) ok = false;
            }
        }
        s.check("dimension-path-count", ok, "all families");
    }
    {  // representation property
        bool ok = true;
        std::ostringstream detail;
        for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
            TowerConfig cfg(f, default_n(4), 4);
            for (int tl = 0; tl <= 4; tl += level_step(f))
                for (const auto& v : vertices(f, tl)) {
                    auto rep = representation_check(cell_module(cfg, tl, v), 0, opts.seed);
                    if (!rep.ok) {
                        ok = false;
                        detail << rep.message << " ";
                    }
                }
            if (max_level >= 3) {
                TowerConfig big(f, default_n(6), 6);
                for (const auto& v : vertices(f, 6)) {
                    auto rep = representation_check(cell_module(big, 6, v), 500, opts.seed);
                    if (!rep.ok) {
                        ok = false;
                        detail << rep.message << " ";
                    }
                }
            }
        }
        s.check("representation-property", ok, detail.str().empty() ? "exhaustive tl<=4, sampled tl=6"
                                                                    : detail.str());
    }
    {  // gram matrices nonsingular at the default n
        bool ok = true;
        for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
            TowerConfig cfg(f, default_n(4), 4);
            for (int tl = 0; tl <= 4; tl += level_step(f))
                for (const auto& v : vertices(f, tl)) {
                    CellModule m = cell_module(cfg, tl, v);
                    BilinearForm form = invariant_form(m);
                    if (rank_of(form.gram) != m.dim()) ok = false;
                    if (form.gram != form.gram.transposed()) ok = false;
                }
        }
        s.check("gram-nonsingular", ok, "tl <= 4, all families");
    }
    return s.report;
}

VerifyReport verify_seminormal(const VerifyOptions& opts) {
    Suite s;
    s.report.suite = "seminormal";
    int max_level = opts.max_level > 0 ? opts.max_level : 3;

    {  // hom dimension is basis independent
        bool ok = true;
        TowerConfig cfg(Family::partition, default_n(4), 4);
        CellModule m = cell_module(cfg, 4, Partition({1}));
        CellModule d1 = cell_module(cfg, 2, Partition({1}));
        std::vector<Matrix> n_side;
        for (const auto& g : d1.gens) n_side.push_back(diagram_action(m, embed_diagram(g, 4)));
        size_t base = hom_space(d1.gen_action, n_side, d1.dim(), m.dim()).size();
        std::mt19937_64 rng(opts.seed);
        Matrix q(m.dim(), m.dim());
        do {
            for (auto& x : q.a) x = Rational(static_cast<long>(rng() % 7) - 3);
        } while (rank_of(q) != m.dim());
        Matrix qi = Matrix::identity(m.dim());
        {  // invert q by solving rows against the RREF basis
            Subspace rows = Subspace::from_rows(q);
            Matrix inv(m.dim(), m.dim());
            for (int i = 0; i < m.dim(); ++i) {
                std::vector<Rational> e(m.dim(), Rational(0));
                e[i] = 1;
                // solve x q = e via left kernel of [q; -e]
                Matrix sys(m.dim() + 1, m.dim());
                for (int r = 0; r < m.dim(); ++r)
                    for (int c = 0; c < m.dim(); ++c) sys.at(r, c) = q.at(r, c);
                for (int c = 0; c < m.dim(); ++c) sys.at(m.dim(), c) = -e[c];
                Matrix ker = left_kernel(sys);
                bool found = false;
                for (int r = 0; r < ker.rows && !found; ++r) {
                    if (ker.at(r, m.dim()) == 0) continue;
                    Rational sc = 1 / ker.at(r, m.dim());
                    for (int c = 0; c < m.dim(); ++c) inv.at(i, c) = sc * ker.at(r, c);
                    found = true;
                }
                if (!found) ok = false;
            }
            qi = inv;
        }
        std::vector<Matrix> conj;
        for (const auto& g : n_side) conj.push_back(qi * g * q);
        size_t changed = hom_space(d1.gen_action, conj, d1.dim(), m.dim()).size();
        if (base != changed) ok = false;
        s.check("hom-basis-independent", ok,
                "dim " + std::to_string(base) + " before and " + std::to_string(changed) + " after");
    }
    {  // isotypic dimensions match restriction multiplicities, at every tower
       // step including the half levels of the partition family
        bool ok = true;
        long cases = 0;
        for (Family f : {Family::partition, Family::brauer}) {
            int top = (f == Family::partition) ? 2 * std::min(max_level, 3) : 2 * std::min(max_level + 1, 4);
            TowerConfig cfg(f, default_n(top), top);
            for (int tl = 0; tl <= top; tl += level_step(f))
                for (const auto& nu : vertices(f, tl)) {
                    CellModule n = cell_module(cfg, tl, nu);
                    for (int sub = 0; sub <= tl; sub += level_step(f))
                        for (const auto& [vert, iso] : isotypic_components(n, sub)) {
                            long ddim = path_count(f, Partition{}, 0, vert, sub);
                            long mult = path_count(f, vert, sub, nu, tl);
                            if (iso.dim() != ddim * mult) ok = false;
                            ++cases;
                        }
                }
        }
        s.check("isotypic-dimensions", ok, std::to_string(cases) + " cases");
    }
    {  // nested refinement: prefix subspaces shrink along each path
        bool ok = true;
        TowerConfig cfg(Family::partition, default_n(4), 4);
        for (const auto& nu : vertices(Family::partition, 4)) {
            CellModule n = cell_module(cfg, 4, nu);
            for (const auto& t : paths(Family::partition, Partition{}, 0, nu, 4)) {
                Subspace prev = Subspace::full(n.dim());
                for (int j = 1; j <= t.steps(); ++j) {
                    PathTableau prefix;
                    prefix.family = t.family;
                    prefix.start_twice_level = 0;
                    prefix.verts.assign(t.verts.begin(), t.verts.begin() + j + 1);
                    Subspace cur = prefix_subspace(n, prefix);
                    if (!prev.contains(cur)) ok = false;
                    prev = cur;
                }
            }
        }
        s.check("refinement-containment", ok);
    }
    {  // path subspaces: complete orthogonal decomposition
        bool ok = true;
        long total = 0;
        int top = 2 * std::min(max_level, 3);
        TowerConfig cfg(Family::partition, 6, top);
        for (int tl = 0; tl <= top; tl += 1)
            for (const auto& nu : vertices(Family::partition, tl)) {
                CellModule n = cell_module(cfg, tl, nu);
                auto subs = path_subspaces(n);
                if (static_cast<long>(subs.size()) != n.dim()) ok = false;
                if (tl <= 4) {
                    Matrix gram = invariant_form(n).gram;
                    for (size_t a = 0; a < subs.size(); ++a)
                        for (size_t b = a + 1; b < subs.size(); ++b) {
                            Matrix x = subs[a].second.basis * gram * subs[b].second.basis.transposed();
                            if (!x.is_zero()) ok = false;
                        }
                }
                total += static_cast<long>(subs.size());
            }
        s.check("path-subspace-decomposition", ok, std::to_string(total) + " subspaces");
    }
    {  // separation and interpolation against the classical tower
        bool ok = true;
        ContentFunction contents = classical_contents(8);
        for (int tl = 2; tl <= 8; tl += 2)
            if (!check_separation(contents, Family::symmetric, tl)) ok = false;
        TowerConfig cfg(Family::symmetric, 0, 6);
        std::vector<AlgebraElement> ls;
        for (int i = 1; i <= 3; ++i) ls.push_back(classical_jm_element(i));
        for (const auto& nu : vertices(Family::symmetric, 6)) {
            CellModule n = cell_module(cfg, 6, nu);
            auto interp = jm_interpolation(n, ls, contents);
            auto direct = path_subspaces(n);
            if (interp.size() != direct.size()) ok = false;
            for (size_t i = 0; i < interp.size() && i < direct.size(); ++i) {
                if (!(interp[i].first == direct[i].first)) ok = false;
                if (interp[i].second != direct[i].second) ok = false;
            }
            auto tri = jm_triangularity_check(n, ls, contents);
            if (!tri.ok) ok = false;
        }
        s.check("jm-plugin-classical", ok, "symmetric tower k<=4 separation, k=3 interpolation");
    }
    return s.report;
}

VerifyReport verify_skew(const VerifyOptions& opts) {
    Suite s;
    s.report.suite = "skew";
    int max_level = opts.max_level > 0 ? opts.max_level : 3;

    {  // skew dimensions and carrier stability
        bool ok = true;
        long cases = 0;
        for (Family f : {Family::partition, Family::brauer}) {
            int rmax = (f == Family::partition) ? std::min(max_level, 3) : std::min(max_level + 1, 4);
            TowerConfig cfg(f, default_n(2 * rmax), 2 * rmax);
            for (int r = 0; r <= rmax; ++r)
                for (int sl = 0; sl <= r; ++sl)
                    for (const auto& lambda : vertices(f, 2 * (r - sl)))
                        for (const auto& nu : vertices(f, 2 * r)) {
                            long expected = path_count(f, lambda, 2 * (r - sl), nu, 2 * r);
                            if (expected == 0) continue;
                            SkewModule sm = skew_module(cfg, lambda, nu, r, sl);
                            if (sm.dim() != expected) ok = false;
                            ++cases;
                        }
        }
        s.check("skew-dimensions", ok, std::to_string(cases) + " modules");
    }
    {  // bottom and top embeddings commute
        bool ok = true;
        TowerConfig cfg(Family::partition, default_n(6), 6);
        for (int r = 2; r <= 3; ++r)
            for (int sl = 1; sl < r; ++sl) {
                CellModule n = cell_module(cfg, 2 * r, Partition({1}));
                for (const auto& g : generators(Family::partition, 2 * (r - sl)))
                    for (const auto& h : generators(Family::partition, 2 * sl)) {
                        Matrix a = diagram_action(n, embed_diagram(g, 2 * r));
                        Matrix b = diagram_action(n, embed_top_diagram(h, sl, r));
                        if (a * b != b * a) ok = false;
                    }
            }
        s.check("bottom-top-commutation", ok);
    }
    {  // m/u difference equals multiplicity times the cell dimension
        bool ok = true;
        long cases = 0;
        for (Family f : {Family::partition, Family::brauer}) {
            int rmax = std::min(max_level, 3);
            TowerConfig cfg(f, default_n(2 * rmax), 2 * rmax);
            for (int r = 1; r <= rmax; ++r)
                for (int sl = 0; sl <= r; ++sl)
                    for (const auto& lambda : vertices(f, 2 * (r - sl)))
                        for (const auto& nu : vertices(f, 2 * r)) {
                            long paths_count = path_count(f, lambda, 2 * (r - sl), nu, 2 * r);
                            if (paths_count == 0) continue;
                            auto [m, u] = m_and_u(cfg, lambda, nu, r, sl);
                            long ddim = path_count(f, Partition{}, 0, lambda, 2 * (r - sl));
                            if (m.dim() - u.dim() != paths_count * ddim) ok = false;
                            if (!m.contains(u)) ok = false;
                            ++cases;
                        }
        }
        s.check("m-u-multiplicity", ok, std::to_string(cases) + " pairs");
    }
    {  // filtration multiplicities are path counts and fill the module
        bool ok = true;
        for (Family f : {Family::partition, Family::brauer, Family::symmetric}) {
            int top = (f == Family::partition) ? 2 * std::min(max_level, 3) : 6;
            TowerConfig cfg(f, default_n(top), top);
            for (const auto& nu : vertices(f, top)) {
                for (int sub = 0; sub <= top; sub += 2) {
                    auto mults = filtration_multiplicities(cfg, nu, top, sub);
                    long total = 0;
                    for (const auto& [vert, mult] : mults) {
                        if (mult != path_count(f, vert, sub, nu, top)) ok = false;
                        total += mult * path_count(f, Partition{}, 0, vert, sub);
                    }
                    if (total != path_count(f, Partition{}, 0, nu, top)) ok = false;
                }
            }
        }
        s.check("filtration-multiplicities", ok);
    }
    {  // semisimple completeness of the skew module over the top algebra
        bool ok = true;
        long cases = 0;
        for (Family f : {Family::partition, Family::brauer}) {
            int rmax = (f == Family::partition) ? 2 : 3;
            TowerConfig cfg(f, default_n(2 * rmax), 2 * rmax);
            for (int r = 1; r <= rmax; ++r)
                for (int sl = 0; sl <= r; ++sl)
                    for (const auto& lambda : vertices(f, 2 * (r - sl)))
                        for (const auto& nu : vertices(f, 2 * r)) {
                            if (path_count(f, lambda, 2 * (r - sl), nu, 2 * r) == 0) continue;
                            SkewModule sm = skew_module(cfg, lambda, nu, r, sl);
                            long total = 0;
                            for (const auto& mu : vertices(f, 2 * sl)) {
                                CellModule dmu = cell_module(cfg, 2 * sl, mu);
                                auto homs = hom_space(dmu.gen_action, sm.gen_action, dmu.dim(), sm.dim());
                                total += static_cast<long>(homs.size()) * dmu.dim();
                            }
                            if (total != sm.dim()) ok = false;
                            ++cases;
                        }
        }
        s.check("skew-hom-completeness", ok, std::to_string(cases) + " modules");
    }
    return s.report;
}

VerifyReport verify_kronecker(const VerifyOptions& opts) {
    Suite s;
    s.report.suite = "kronecker";
    int max_level = opts.max_level > 0 ? opts.max_level : 3;

    {  // symmetry of the character route
        bool ok = true;
        for (const auto& a : partitions_of(4))
            for (const auto& b : partitions_of(4))
                for (const auto& c : partitions_of(4)) {
                    long g = kronecker_coefficient(a, b, c);
                    if (g != kronecker_coefficient(b, a, c) || g != kronecker_coefficient(c, b, a))
                        ok = false;
                }
        s.check("kronecker-symmetric", ok, "all triples of degree 4");
    }
    {  // oracle equality: hom route equals character route
        bool ok = true;
        long triples = 0;
        int rmax = std::min(max_level, 3);
        for (int r = 0; r <= rmax; ++r) {
            TowerConfig cfg(Family::partition, std::max(2L * r, 2L), 2 * r);
            for (int sl = 0; sl <= r; ++sl) {
                std::vector<CellModule> mu_modules;
                std::vector<Partition> mus = partitions_of(sl);
                for (const auto& mu : mus) mu_modules.push_back(cell_module(cfg, 2 * sl, mu));
                for (const auto& lambda : partitions_of(r - sl))
                    for (int dnu = 0; dnu <= r; ++dnu)
                        for (const auto& nu : partitions_of(dnu)) {
                            bool empty =
                                path_count(Family::partition, lambda, 2 * (r - sl), nu, 2 * r) == 0;
                            std::optional<SkewModule> sm;
                            if (!empty) sm = skew_module(cfg, lambda, nu, r, sl);
                            for (size_t i = 0; i < mus.size(); ++i) {
                                long via_char = stable_kronecker(lambda, mus[i], nu).value;
                                long via_hom =
                                    empty ? 0
                                          : static_cast<long>(hom_space(mu_modules[i].gen_action,
                                                                        sm->gen_action,
                                                                        mu_modules[i].dim(), sm->dim())
                                                                  .size());
                                if (via_char != via_hom) ok = false;
                                ++triples;
                            }
                        }
            }
        }
        s.check("hom-equals-character", ok, std::to_string(triples) + " triples");
    }
    return s.report;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"diagrams", "algebra", "branching", "cellmod", "seminormal", "skew", "kronecker"};
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "diagrams") return verify_diagrams(opts);
    if (name == "algebra") return verify_algebra(opts);
    if (name == "branching") return verify_branching(opts);
    if (name == "cellmod") return verify_cellmod(opts);
    if (name == "seminormal") return verify_seminormal(opts);
    if (name == "skew") return verify_skew(opts);
    if (name == "kronecker") return verify_kronecker(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace skewcell
