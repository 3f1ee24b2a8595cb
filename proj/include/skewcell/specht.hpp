#pragma once

#include <vector>

#include "skewcell/branching.hpp"
#include "skewcell/linalg.hpp"

namespace skewcell {

// A standard Young tableau stored by rows.
struct YoungTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    // (row, col) of entry v, 0-based.
    std::pair<int, int> find_entry(int v) const;
    // content of entry v: col - row.
    int content(int v) const;
    friend bool operator==(const YoungTableau& x, const YoungTableau& y) { return x.rows == y.rows; }
};

std::vector<YoungTableau> standard_tableaux(const Partition& shape);

// Number of standard tableaux by direct enumeration (the hook-length value
// lives in test oracles, not here).
long tableau_count(const Partition& shape);

// Young's seminormal representation of the symmetric group on the tableaux
// of one shape.  Matrices act on row vectors from the right and satisfy
// rho(sigma tau) = rho(sigma) rho(tau) with functional composition
// (sigma tau)(x) = sigma(tau(x)).
struct SpechtRep {
    Partition shape;
    std::vector<YoungTableau> tabs;
    int dim = 0;
    std::vector<Matrix> gen;  // right-action matrices of s_1 .. s_{m-1}
};

SpechtRep seminormal_rep(const Partition& shape);

// Right-action matrix of an arbitrary permutation (images, 1-based).
Matrix perm_action(const SpechtRep& rep, const std::vector<int>& perm);

// The invariant symmetric bilinear form of the representation, normalized so
// the leading entry is 1.  Unique up to scale because the module is simple.
Matrix specht_gram(const SpechtRep& rep);

std::vector<int> inverse_perm(const std::vector<int>& perm);

}  // namespace skewcell
