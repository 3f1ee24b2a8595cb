#pragma once

#include <map>
#include <utility>
#include <vector>

#include "skewcell/cellmod.hpp"
#include "skewcell/linalg.hpp"

namespace skewcell {

// Basis of { X : M_g X = X N_g for every aligned generator pair }, i.e. of
// Hom(M, N) for right modules in row convention.  Generator lists may be
// empty (trivial subalgebra), hence the explicit dimensions.
std::vector<Matrix> hom_space(const std::vector<Matrix>& m_gens, const std::vector<Matrix>& n_gens,
                              int dim_m, int dim_n);

// The lambda-isotypic component of the restriction of N to the level-j
// subalgebra: the sum of images of a Hom basis from the cell module at j.
Subspace isotypic_component(const CellModule& n, int sub_twice_level, const Partition& lambda);

// Isotypic components for every vertex at the level, keyed in canonical
// vertex order; they are independent and sum to N in the generic regime.
std::vector<std::pair<Partition, Subspace>> isotypic_components(const CellModule& n,
                                                                int sub_twice_level);

// The nested isotypic refinement: one subspace per standard tableau of the
// module's shape, each of dimension one.  Realizes the interpolation
// idempotents without needing Jucys-Murphy elements.
std::vector<std::pair<PathTableau, Subspace>> path_subspaces(const CellModule& n);

// Refinement along a fixed path prefix: intersect the isotypic components of
// the prefix vertices, level by level.
Subspace prefix_subspace(const CellModule& n, const PathTableau& prefix);

// Plug-in content data d(lambda); step contents are differences along edges.
struct ContentFunction {
    std::map<std::pair<int, Partition>, Rational> d;  // (twice_level, vertex) -> d(lambda)

    Rational value(int twice_level, const Partition& p) const;
    Rational step_content(const PathTableau& t, int j) const;  // c_t(j), 1-based step
};

// Box contents summed over the shape: the classical content function of the
// symmetric tower.
ContentFunction classical_contents(int max_twice_level);

// L_i = sum of transpositions (j i) for j < i, at twice_level 2i.
AlgebraElement classical_jm_element(int i);

// Injectivity of path -> content vector over all shapes at the level.
bool check_separation(const ContentFunction& contents, Family f, int twice_level);

// Interpolation idempotents F_t evaluated as matrices on N; the images must
// coincide with path_subspaces when the inputs are valid.
std::vector<std::pair<PathTableau, Subspace>> jm_interpolation(const CellModule& n,
                                                               const std::vector<AlgebraElement>& ls,
                                                               const ContentFunction& contents);

// In the path-subspace basis, L_j acts with diagonal entries c_t(j) and
// off-diagonal support only toward dominance-larger suffixes; the level sum
// of the family is central.
CheckReport jm_triangularity_check(const CellModule& n, const std::vector<AlgebraElement>& ls,
                                   const ContentFunction& contents);

}  // namespace skewcell
