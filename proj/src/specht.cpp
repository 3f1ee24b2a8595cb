#include "skewcell/specht.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewcell/seminormal.hpp"

namespace skewcell {

std::pair<int, int> YoungTableau::find_entry(int v) const {
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == v) return {static_cast<int>(r), static_cast<int>(c)};
    throw std::invalid_argument("entry not in tableau");
}

int YoungTableau::content(int v) const {
    auto [r, c] = find_entry(v);
    return c - r;
}

std::vector<YoungTableau> standard_tableaux(const Partition& shape) {
    int m = shape.degree();
    std::vector<YoungTableau> out;
    if (m == 0) {
        out.push_back(YoungTableau{shape, {}});
        return out;
    }
    // Strip the largest entry from each removable corner and recurse.
    for (size_t r = 0; r < shape.parts.size(); ++r) {
        bool corner = (r + 1 == shape.parts.size()) || shape.parts[r] > shape.parts[r + 1];
        if (!corner) continue;
        Partition smaller = shape;
        smaller.parts[r] -= 1;
        if (smaller.parts[r] == 0) smaller.parts.pop_back();
        for (auto& t : standard_tableaux(smaller)) {
            YoungTableau full;
            full.shape = shape;
            full.rows = t.rows;
            if (full.rows.size() <= r) full.rows.push_back({});
            full.rows[r].push_back(m);
            out.push_back(std::move(full));
        }
    }
    return out;
}

long tableau_count(const Partition& shape) {
    return static_cast<long>(standard_tableaux(shape).size());
}

SpechtRep seminormal_rep(const Partition& shape) {
    SpechtRep rep;
    rep.shape = shape;
    rep.tabs = standard_tableaux(shape);
    rep.dim = static_cast<int>(rep.tabs.size());
    int m = shape.degree();
    for (int i = 1; i < m; ++i) {
        Matrix R(rep.dim, rep.dim);
        for (int a = 0; a < rep.dim; ++a) {
            const YoungTableau& t = rep.tabs[a];
            auto [r1, c1] = t.find_entry(i);
            auto [r2, c2] = t.find_entry(i + 1);
            if (r1 == r2) {
                R.at(a, a) = 1;
                continue;
            }
            if (c1 == c2) {
                R.at(a, a) = -1;
                continue;
            }
            Rational alpha = Rational(1) / Rational((c2 - r2) - (c1 - r1));
            R.at(a, a) = alpha;
            YoungTableau swapped = t;
            std::swap(swapped.rows[r1][c1], swapped.rows[r2][c2]);
            int b = -1;
            for (int j = 0; j < rep.dim; ++j)
                if (rep.tabs[j] == swapped) {
                    b = j;
                    break;
                }
            if (b < 0) throw std::logic_error("swapped tableau not found");
            // Off-diagonal normalization: coefficient 1 out of the tableau
            // with i+1 strictly below i, 1 - alpha^2 out of the other one.
            R.at(a, b) = (r2 > r1) ? Rational(1) : Rational(1) - alpha * alpha;
        }
        rep.gen.push_back(std::move(R));
    }
    return rep;
}

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

Matrix perm_action(const SpechtRep& rep, const std::vector<int>& perm) {
    int m = static_cast<int>(perm.size());
    if (m != rep.shape.degree()) throw std::invalid_argument("permutation size mismatch");
    // Sort the image sequence with adjacent swaps: recording sigma * s_j1 *
    // ... * s_jl = id gives sigma = s_jl o ... o s_j1 under functional
    // composition, so the matrix is the reversed product.
    std::vector<int> seq = perm;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j + 1 < m; ++j)
            if (seq[j] > seq[j + 1]) {
                std::swap(seq[j], seq[j + 1]);
                word.push_back(j);
                moved = true;
            }
    }
    Matrix out = Matrix::identity(rep.dim);
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = out * rep.gen[*it];
    return out;
}

Matrix specht_gram(const SpechtRep& rep) {
    if (rep.dim == 0) throw std::invalid_argument("empty representation");
    if (rep.gen.empty()) {
        return Matrix::identity(rep.dim);
    }
    // Invariance reads rho(s) G = G rho(s)^T on generators; the solution
    // space is one-dimensional because the module is simple.
    std::vector<Matrix> lhs = rep.gen;
    std::vector<Matrix> rhs;
    for (const auto& g : rep.gen) rhs.push_back(g.transposed());
    auto basis = hom_space(lhs, rhs, rep.dim, rep.dim);
    if (basis.size() != 1) throw std::logic_error("invariant form is not unique up to scale");
    Matrix g = basis[0];
    if (g.at(0, 0) == 0) throw std::logic_error("degenerate leading entry in invariant form");
    g = (1 / g.at(0, 0)) * g;
    if (g != g.transposed()) throw std::logic_error("invariant form is not symmetric");
    return g;
}

}  // namespace skewcell
