#include "skewcell/seminormal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace skewcell {

std::vector<Matrix> hom_space(const std::vector<Matrix>& m_gens, const std::vector<Matrix>& n_gens,
                              int dim_m, int dim_n) {
    if (m_gens.size() != n_gens.size())
        throw std::invalid_argument("hom_space: generator lists are not aligned");
    for (const auto& g : m_gens)
        if (g.rows != dim_m || g.cols != dim_m)
            throw std::invalid_argument("hom_space: left generator dimension mismatch");
    for (const auto& g : n_gens)
        if (g.rows != dim_n || g.cols != dim_n)
            throw std::invalid_argument("hom_space: right generator dimension mismatch");
    if (dim_m == 0 || dim_n == 0) return {};
    // Start from the full matrix space and cut by one Sylvester constraint
    // per generator; the basis shrinks quickly, which keeps the elimination
    // small.
    std::vector<Matrix> basis;
    basis.reserve(static_cast<size_t>(dim_m) * dim_n);
    for (int p = 0; p < dim_m; ++p)
        for (int q = 0; q < dim_n; ++q) {
            Matrix e(dim_m, dim_n);
            e.at(p, q) = 1;
            basis.push_back(std::move(e));
        }
    for (size_t g = 0; g < m_gens.size() && !basis.empty(); ++g) {
        Matrix residual(static_cast<int>(basis.size()), dim_m * dim_n);
        for (size_t b = 0; b < basis.size(); ++b) {
            Matrix r = m_gens[g] * basis[b] - basis[b] * n_gens[g];
            for (int i = 0; i < dim_m; ++i)
                for (int j = 0; j < dim_n; ++j) residual.at(static_cast<int>(b), i * dim_n + j) = r.at(i, j);
        }
        Matrix ker = left_kernel(residual);
        std::vector<Matrix> next;
        next.reserve(ker.rows);
        for (int row = 0; row < ker.rows; ++row) {
            Matrix x(dim_m, dim_n);
            for (size_t b = 0; b < basis.size(); ++b) {
                const Rational& c = ker.at(row, static_cast<int>(b));
                if (c == 0) continue;
                for (int i = 0; i < dim_m; ++i)
                    for (int j = 0; j < dim_n; ++j)
                        if (basis[b].at(i, j) != 0) x.at(i, j) += c * basis[b].at(i, j);
            }
            next.push_back(std::move(x));
        }
        basis = std::move(next);
    }
    return basis;
}

namespace {

// Generator matrices of the level-j subalgebra acting on N through the
// tower embedding, aligned with the generator matrices on the level-j cell
// modules.  An empty generating set (trivial subalgebra) stays empty; the
// hom systems then have no constraints, which is the correct module theory.
std::vector<Matrix> embedded_generator_action(const CellModule& n, int sub_twice_level) {
    std::vector<Matrix> out;
    for (const auto& g : generators(n.cfg.family, sub_twice_level))
        out.push_back(diagram_action(n, embed_diagram(g, n.twice_level)));
    return out;
}

}  // namespace

Subspace isotypic_component(const CellModule& n, int sub_twice_level, const Partition& lambda) {
    if (!valid_vertex(n.cfg.family, sub_twice_level, lambda))
        throw std::invalid_argument("isotypic: invalid vertex " + lambda.str() + " at twice_level " +
                                    std::to_string(sub_twice_level));
    CellModule delta = cell_module(n.cfg, sub_twice_level, lambda);
    std::vector<Matrix> n_side = embedded_generator_action(n, sub_twice_level);
    auto homs = hom_space(delta.gen_action, n_side, delta.dim(), n.dim());
    if (homs.empty()) return Subspace::zero(n.dim());
    Matrix stacked(static_cast<int>(homs.size()) * delta.dim(), n.dim());
    int r = 0;
    for (const auto& x : homs)
        for (int i = 0; i < x.rows; ++i, ++r)
            for (int j = 0; j < x.cols; ++j) stacked.at(r, j) = x.at(i, j);
    return Subspace::from_rows(std::move(stacked));
}

std::vector<std::pair<Partition, Subspace>> isotypic_components(const CellModule& n,
                                                                int sub_twice_level) {
    std::vector<std::pair<Partition, Subspace>> out;
    for (const auto& v : vertices(n.cfg.family, sub_twice_level))
        out.emplace_back(v, isotypic_component(n, sub_twice_level, v));
    return out;
}

Subspace prefix_subspace(const CellModule& n, const PathTableau& prefix) {
    if (prefix.family != n.cfg.family || prefix.start_twice_level != 0)
        throw std::invalid_argument("prefix_subspace: prefix must start at level 0");
    Subspace v = Subspace::full(n.dim());
    int step = level_step(n.cfg.family);
    for (int j = 1; j <= prefix.steps(); ++j) {
        if (v.dim() == 0) break;
        v = intersect(v, isotypic_component(n, j * step, prefix.at_step(j)));
    }
    return v;
}

std::vector<std::pair<PathTableau, Subspace>> path_subspaces(const CellModule& n) {
    int step = level_step(n.cfg.family);
    int nsteps = n.twice_level / step;
    // one isotypic table per intermediate level, computed once
    std::vector<std::vector<std::pair<Partition, Subspace>>> iso(nsteps + 1);
    for (int j = 1; j < nsteps; ++j) iso[j] = isotypic_components(n, j * step);

    std::vector<std::pair<PathTableau, Subspace>> out;
    PathTableau cur;
    cur.family = n.cfg.family;
    cur.start_twice_level = 0;
    cur.verts.push_back(Partition{});
    std::function<void(int, const Subspace&)> rec = [&](int j, const Subspace& space) {
        if (space.dim() == 0) return;
        if (j == nsteps) {
            if (!(cur.last() == n.shape)) return;
            if (space.dim() != 1)
                throw std::runtime_error("path subspace of dimension " + std::to_string(space.dim()) +
                                         " at " + path_str(cur) + "; separation fails");
            out.emplace_back(cur, space);
            return;
        }
        for (const auto& w : reflected_edges(n.cfg.family, (j)*step, cur.verts.back())) {
            cur.verts.push_back(w);
            if (j + 1 == nsteps) {
                if (w == n.shape) rec(j + 1, space);
            } else {
                const Subspace* target = nullptr;
                for (const auto& [vert, sub] : iso[j + 1])
                    if (vert == w) target = &sub;
                if (target) rec(j + 1, intersect(space, *target));
            }
            cur.verts.pop_back();
        }
    };
    rec(0, Subspace::full(n.dim()));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return revlex_total_less(a.first, b.first); });
    // completeness of the decomposition
    long expected = path_count(n.cfg.family, Partition{}, 0, n.shape, n.twice_level);
    if (static_cast<long>(out.size()) != expected || expected != n.dim())
        throw std::runtime_error("path subspace count mismatch");
    Subspace total = Subspace::zero(n.dim());
    for (const auto& [p, s] : out) total = sum(total, s);
    if (total.dim() != n.dim()) throw std::runtime_error("path subspaces do not sum to the module");
    return out;
}

Rational ContentFunction::value(int twice_level, const Partition& p) const {
    if (twice_level == 0) return 0;
    auto it = d.find({twice_level, p});
    if (it == d.end())
        throw std::invalid_argument("content function has no value for " + p.str() + " at twice_level " +
                                    std::to_string(twice_level));
    return it->second;
}

Rational ContentFunction::step_content(const PathTableau& t, int j) const {
    int step = level_step(t.family);
    int tl_prev = t.start_twice_level + (j - 1) * step;
    int tl_cur = tl_prev + step;
    return value(tl_cur, t.at_step(j)) - value(tl_prev, t.at_step(j - 1));
}

ContentFunction classical_contents(int max_twice_level) {
    ContentFunction f;
    for (int tl = 2; tl <= max_twice_level; tl += 2)
        for (const auto& v : vertices(Family::symmetric, tl)) {
            Rational total = 0;
            for (size_t r = 0; r < v.parts.size(); ++r)
                for (int c = 0; c < v.parts[r]; ++c) total += Rational(c - static_cast<int>(r));
            f.d[{tl, v}] = total;
        }
    return f;
}

AlgebraElement classical_jm_element(int i) {
    AlgebraElement l = AlgebraElement::zero(2 * i);
    for (int j = 1; j < i; ++j) {
        // the transposition (j i) as a permutation diagram
        std::vector<std::vector<int>> blocks;
        for (int p = 1; p <= i; ++p) {
            if (p == j)
                blocks.push_back({p, i + i});
            else if (p == i)
                blocks.push_back({p, i + j});
            else
                blocks.push_back({p, i + p});
        }
        l.add_term(make_diagram(2 * i, blocks), 1);
    }
    return l;
}

namespace {

std::vector<PathTableau> all_paths_at_level(Family f, int twice_level) {
    std::vector<PathTableau> out;
    for (const auto& v : vertices(f, twice_level))
        for (auto& p : paths(f, Partition{}, 0, v, twice_level)) out.push_back(std::move(p));
    return out;
}

std::vector<std::vector<Rational>> content_vectors(const ContentFunction& contents,
                                                   const std::vector<PathTableau>& all) {
    std::vector<std::vector<Rational>> vecs;
    for (const auto& t : all) {
        std::vector<Rational> v;
        for (int j = 1; j <= t.steps(); ++j) v.push_back(contents.step_content(t, j));
        vecs.push_back(std::move(v));
    }
    return vecs;
}

}  // namespace

bool check_separation(const ContentFunction& contents, Family f, int twice_level) {
    auto all = all_paths_at_level(f, twice_level);
    auto vecs = content_vectors(contents, all);
    for (size_t a = 0; a < vecs.size(); ++a)
        for (size_t b = a + 1; b < vecs.size(); ++b)
            if (vecs[a] == vecs[b]) return false;
    return true;
}

std::vector<std::pair<PathTableau, Subspace>> jm_interpolation(const CellModule& n,
                                                               const std::vector<AlgebraElement>& ls,
                                                               const ContentFunction& contents) {
    int step = level_step(n.cfg.family);
    int nsteps = n.twice_level / step;
    if (static_cast<int>(ls.size()) != nsteps)
        throw std::invalid_argument("jm_interpolation: expected one element per level");
    std::vector<Matrix> lmat;
    for (int i = 0; i < nsteps; ++i) {
        if (ls[i].twice_level != (i + 1) * step)
            throw std::invalid_argument("jm_interpolation: element level mismatch");
        lmat.push_back(element_action(n, embed(ls[i], ls[i].twice_level, n.twice_level)));
    }
    for (size_t a = 0; a < lmat.size(); ++a)
        for (size_t b = a + 1; b < lmat.size(); ++b)
            if (lmat[a] * lmat[b] != lmat[b] * lmat[a])
                throw std::invalid_argument("jm_interpolation: supplied elements do not commute");

    auto all = all_paths_at_level(n.cfg.family, n.twice_level);
    auto vecs = content_vectors(contents, all);
    for (size_t a = 0; a < vecs.size(); ++a)
        for (size_t b = a + 1; b < vecs.size(); ++b)
            if (vecs[a] == vecs[b])
                throw std::runtime_error("separation condition fails: equal content vectors on " +
                                         path_str(all[a]) + " and " + path_str(all[b]));

    std::vector<std::pair<PathTableau, Subspace>> out;
    for (size_t a = 0; a < all.size(); ++a) {
        if (!(all[a].last() == n.shape)) continue;
        Matrix f = Matrix::identity(n.dim());
        for (int j = 0; j < nsteps; ++j) {
            // distinct content values of other paths at step j+1
            std::vector<Rational> others;
            for (size_t b = 0; b < all.size(); ++b) {
                const Rational& c = vecs[b][j];
                if (c == vecs[a][j]) continue;
                if (std::find(others.begin(), others.end(), c) == others.end()) others.push_back(c);
            }
            for (const Rational& c : others) {
                Matrix term = lmat[j] - c * Matrix::identity(n.dim());
                f = Rational(1) / (vecs[a][j] - c) * (f * term);
            }
        }
        Subspace image = Subspace::from_rows(f);
        out.emplace_back(all[a], std::move(image));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return revlex_total_less(x.first, y.first); });
    return out;
}

CheckReport jm_triangularity_check(const CellModule& n, const std::vector<AlgebraElement>& ls,
                                   const ContentFunction& contents) {
    auto subspaces = path_subspaces(n);
    int dim = n.dim();
    Matrix basis(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) basis.at(i, j) = subspaces[i].second.basis.at(0, j);
    Subspace full = Subspace::from_rows(basis);
    if (full.dim() != dim) return {false, "path-subspace vectors are not a basis"};
    for (size_t j = 0; j < ls.size(); ++j) {
        Matrix l = element_action(n, embed(ls[j], ls[j].twice_level, n.twice_level));
        for (int t = 0; t < dim; ++t) {
            std::vector<Rational> image = row_times(basis.row(t), l);
            // coordinates in the (non-RREF) path basis via a solve
            Matrix sys(dim + 1, dim);
            for (int i = 0; i < dim; ++i)
                for (int c = 0; c < dim; ++c) sys.at(i, c) = basis.at(i, c);
            for (int c = 0; c < dim; ++c) sys.at(dim, c) = image[c];
            Matrix ker = left_kernel(sys);
            // rows of ker with nonzero last coordinate express image in basis
            std::vector<Rational> coeff(dim, Rational(0));
            bool found = false;
            for (int r = 0; r < ker.rows && !found; ++r) {
                if (ker.at(r, dim) == 0) continue;
                Rational scale = -1 / ker.at(r, dim);
                for (int i = 0; i < dim; ++i) coeff[i] = scale * ker.at(r, i);
                found = true;
            }
            if (!found) return {false, "image escapes the path basis"};
            Rational expect = contents.step_content(subspaces[t].first, static_cast<int>(j) + 1);
            if (coeff[t] != expect)
                return {false, "diagonal entry for " + path_str(subspaces[t].first) + " at step " +
                                   std::to_string(j + 1) + " is " + rat_str(coeff[t]) + ", expected " +
                                   rat_str(expect)};
            for (int s = 0; s < dim; ++s) {
                if (s == t || coeff[s] == 0) continue;
                if (!suffix_dominance_gt(subspaces[s].first, subspaces[t].first, static_cast<int>(j)))
                    return {false, "off-diagonal term from " + path_str(subspaces[t].first) + " to " +
                                       path_str(subspaces[s].first) + " violates dominance at step " +
                                       std::to_string(j + 1)};
            }
        }
    }
    // centrality of the level sum, checked in the algebra itself
    AlgebraElement total = AlgebraElement::zero(n.twice_level);
    for (const auto& l : ls) total = total + embed(l, l.twice_level, n.twice_level);
    for (const auto& g : generators(n.cfg.family, n.twice_level)) {
        AlgebraElement ge = AlgebraElement::from_diagram(g);
        if (multiply(total, ge, n.cfg) != multiply(ge, total, n.cfg))
            return {false, "level sum fails to commute with " + diagram_str(g)};
    }
    return {true, std::to_string(ls.size()) + " elements checked on " + std::to_string(dim) + " paths"};
}

}  // namespace skewcell
