#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewcell/diagrams.hpp"
#include "skewcell/rational.hpp"

namespace skewcell {

// A tower of diagram algebras at a fixed integer loop parameter n.  The
// generic regime needs n at least twice the largest integer level; the
// constructor enforces that (the symmetric tower ignores n).
struct TowerConfig {
    Family family = Family::partition;
    long n = 0;
    int max_twice_level = 0;

    TowerConfig() = default;
    TowerConfig(Family f, long n_value, int max_tl);
};

inline long default_n(int max_twice_level) { return 2L * points_at(max_twice_level); }

// A formal exact-rational linear combination of canonical diagrams at one
// tower level.  Zero coefficients are never stored.
struct AlgebraElement {
    int twice_level = 0;
    std::map<SetPartitionDiagram, Rational> terms;

    static AlgebraElement zero(int twice_level) { return AlgebraElement{twice_level, {}}; }
    static AlgebraElement from_diagram(const SetPartitionDiagram& d, const Rational& c = 1);
    static AlgebraElement unit(int twice_level);

    void add_term(const SetPartitionDiagram& d, const Rational& c);
    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
        return x.twice_level == y.twice_level && x.terms == y.terms;
    }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(const Rational& c, const AlgebraElement& x);

// Bilinear extension of diagram composition with every loop evaluated as n.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const TowerConfig& cfg);

AlgebraElement involute(const AlgebraElement& x);

// Unital tower embedding: identity strands (and identity half blocks) are
// appended on the right.
SetPartitionDiagram embed_diagram(const SetPartitionDiagram& d, int to_twice_level);
AlgebraElement embed(const AlgebraElement& x, int from_twice_level, int to_twice_level);

// Image of the top copy 1 x A_s inside A_r: strand indices shift up by r-s
// and identity strands fill the bottom.  Levels are integers.
SetPartitionDiagram embed_top_diagram(const SetPartitionDiagram& d, int s_level, int r_level);
AlgebraElement embed_top(const AlgebraElement& x, int s_level, int r_level);

long algebra_dimension(const TowerConfig& cfg, int twice_level);

// The diagrammatic essential idempotent of the basic construction at the
// level, together with its loop scalar delta (e*e = delta*e).
std::pair<AlgebraElement, Rational> essential_idempotent(const TowerConfig& cfg, int twice_level);

// Standard generating sets used for every representation-level check:
// symmetric - adjacent transpositions; brauer - transpositions and cup-caps;
// partition - transpositions, singleton projectors and merge elements (the
// half level adds the merge reaching into the last strand).
std::vector<SetPartitionDiagram> generators(Family f, int twice_level);

// Generator diagram builders (1-based strand index i).
SetPartitionDiagram transposition_diagram(int twice_level, int i);  // s_i swaps strands i, i+1
SetPartitionDiagram singleton_diagram(int twice_level, int i);      // p_i cuts strand i
SetPartitionDiagram merge_diagram(int twice_level, int i);          // b_i joins strands i, i+1
SetPartitionDiagram cupcap_diagram(int twice_level, int i);         // e_i cup-cap on strands i, i+1

}  // namespace skewcell
