#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewcell/algebra.hpp"
#include "skewcell/branching.hpp"
#include "skewcell/linalg.hpp"
#include "skewcell/specht.hpp"

#include <json.hpp>

namespace skewcell {

// Bottom half of a diagram: a set partition of {1..K} with a subset of
// blocks marked propagating.  At odd twice_level the block containing the
// last point is pinned and always propagates; the tableau factor acts on the
// remaining propagating blocks, ordered by least element.
struct HalfDiagram {
    int twice_level = 0;
    std::vector<uint32_t> blocks;  // bit p-1 for point p, sorted by least element
    std::vector<char> prop;       // aligned flags

    int npoints() const { return points_at(twice_level); }
    int special_block() const;  // index of the pinned block, -1 at even levels
    std::vector<int> prop_indices(bool include_special) const;
    std::string str() const;  // propagating blocks are starred, e.g. {1,2}*{3}

    friend bool operator==(const HalfDiagram& x, const HalfDiagram& y) {
        return x.twice_level == y.twice_level && x.blocks == y.blocks && x.prop == y.prop;
    }
    friend bool operator<(const HalfDiagram& x, const HalfDiagram& y) {
        if (x.twice_level != y.twice_level) return x.twice_level < y.twice_level;
        if (x.blocks != y.blocks) return x.blocks < y.blocks;
        return x.prop < y.prop;
    }
};

// All half diagrams of the family at the level with nprop non-pinned
// propagating blocks, in a fixed canonical order.
std::vector<HalfDiagram> enumerate_half_diagrams(Family f, int twice_level, int nprop);

// Result of gluing a half diagram on top of a full diagram: loop count, the
// resulting half diagram, and where each propagating block went (old index
// -> new index over the non-pinned propagating blocks in canonical order).
// Empty when the propagating count drops, i.e. the cell module sees zero.
struct GlueResult {
    int loops = 0;
    HalfDiagram half;
    std::vector<int> prop_map;
};
std::optional<GlueResult> glue_action(const HalfDiagram& v, const SetPartitionDiagram& d);

// A cell module with explicit exact action matrices.  Basis vectors are
// pairs (half diagram, standard tableau); the index is h * rep.dim + t.
// Right module: rows act by matrices on the right.
struct CellModule {
    TowerConfig cfg;
    int twice_level = 0;
    Partition shape;
    std::vector<HalfDiagram> halves;
    SpechtRep rep;
    std::vector<SetPartitionDiagram> gens;
    std::vector<Matrix> gen_action;

    int dim() const { return static_cast<int>(halves.size()) * rep.dim; }
    int basis_index(int half, int tab) const { return half * rep.dim + tab; }
};

CellModule cell_module(const TowerConfig& cfg, int twice_level, const Partition& shape);

// Action of an arbitrary basis diagram, computed directly from the gluing
// rule (not through generator words).
Matrix diagram_action(const CellModule& m, const SetPartitionDiagram& d);
Matrix element_action(const CellModule& m, const AlgebraElement& x);

struct CheckReport {
    bool ok = true;
    std::string message;
};

// rho(x) rho(y) == n^loops rho(xy) over diagram pairs: exhaustive when the
// basis is small enough, otherwise `trials` seeded random pairs.
CheckReport representation_check(const CellModule& m, long trials, uint64_t seed = 0);

// Action matrices of the lower-level algebra generators under the tower
// embedding; the unit matrix when the subalgebra has no generators.
std::vector<Matrix> restrict_action(const CellModule& m, int sub_twice_level);

struct BilinearForm {
    Matrix gram;
};

// The invariant bilinear form: half diagrams are glued along {1..K}; a
// perfect matching of propagating blocks contributes n^loops times the
// seminormal form twisted by the induced permutation, anything else 0.
BilinearForm invariant_form(const CellModule& m);

nlohmann::json module_json(const CellModule& m);

}  // namespace skewcell
