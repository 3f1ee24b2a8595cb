#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "skewcell/cellmod.hpp"
#include "skewcell/seminormal.hpp"

namespace skewcell {

// The skew cell module attached to vertices lambda at level r-s and nu at
// level r: the subspace of the cell module at nu cut out by refining along a
// dominance-maximal path to lambda, carrying the action of the top copy of
// the level-s algebra.
struct SkewModule {
    TowerConfig cfg;
    Partition lambda, nu;
    int r_level = 0, s_level = 0;
    PathTableau prefix;  // the chosen maximal path to lambda
    Subspace carrier;    // inside the cell module at nu
    std::vector<SetPartitionDiagram> gens;  // level-s generators, unembedded
    std::vector<Matrix> gen_action;         // restricted to the carrier

    int dim() const { return carrier.dim(); }
};

// The spans M (paths through vertices above-or-equal lambda) and U (strictly
// above), realized as sums of isotypic components.  Both are stable under
// the restricted bottom action and under the embedded top action.
std::pair<Subspace, Subspace> m_and_u(const TowerConfig& cfg, const Partition& lambda,
                                      const Partition& nu, int r_level, int s_level);

// Dominance-maximal standard tableau of the shape, ties broken by the
// reverse-lexicographic total order.
PathTableau maximal_path(Family f, const Partition& lambda, int twice_level);

SkewModule skew_module(const TowerConfig& cfg, const Partition& lambda, const Partition& nu,
                       int r_level, int s_level,
                       const std::optional<PathTableau>& prefix_override = std::nullopt);

// Action of an arbitrary level-s diagram on the carrier.
Matrix skew_action(const SkewModule& sm, const SetPartitionDiagram& d);

// multiplicity(lambda) = dim isotypic(lambda) / dim Delta(lambda) for every
// vertex at the lower level, asserted integral.
std::map<Partition, long> filtration_multiplicities(const TowerConfig& cfg, const Partition& nu,
                                                    int r_twice_level, int sub_twice_level);

}  // namespace skewcell
