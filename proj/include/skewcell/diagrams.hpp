#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewcell {

enum class Family { partition, brauer, symmetric };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Number of points per row at a given twice_level: ceil(twice_level / 2).
// Odd twice_levels are the half steps of the partition tower; their diagrams
// live on K points with the constraint that K and K-bar share a block.
inline int points_at(int twice_level) { return (twice_level + 1) / 2; }

inline int level_step(Family f) { return f == Family::partition ? 1 : 2; }

// A set partition of {1..K, 1bar..Kbar}.  Point p in 1..K is southern,
// point K+i is i-bar (northern).  Blocks are bitmasks (bit p-1 for point p),
// sorted by least element; this form is unique, so equality is bitwise.
struct SetPartitionDiagram {
    int twice_level = 0;
    std::vector<uint32_t> blocks;

    int npoints() const { return points_at(twice_level); }

    friend bool operator==(const SetPartitionDiagram& x, const SetPartitionDiagram& y) {
        return x.twice_level == y.twice_level && x.blocks == y.blocks;
    }
    friend bool operator!=(const SetPartitionDiagram& x, const SetPartitionDiagram& y) { return !(x == y); }
    friend bool operator<(const SetPartitionDiagram& x, const SetPartitionDiagram& y) {
        if (x.twice_level != y.twice_level) return x.twice_level < y.twice_level;
        return x.blocks < y.blocks;
    }
};

// Composition result before the loop parameter is evaluated: the loop count
// stays symbolic as the exponent of n.
struct LoopWeightedDiagram {
    int loops = 0;
    SetPartitionDiagram diagram;
};

// Builds and canonicalizes a diagram from explicit blocks of point ids
// (1..K southern, K+1..2K northern).  Throws on malformed input.
SetPartitionDiagram make_diagram(int twice_level, const std::vector<std::vector<int>>& blocks);

// Validates the cover/disjointness/canonical-order invariants, plus the
// half-level block constraint at odd twice_level.
void validate_diagram(const SetPartitionDiagram& d);

SetPartitionDiagram identity_diagram(int twice_level);

// Concatenation of x above y (southern points of x glued to northern points
// of y).  Closed middle components are counted symbolically.
LoopWeightedDiagram compose(const SetPartitionDiagram& x, const SetPartitionDiagram& y);

// The vertical flip i <-> i-bar; realizes the cellular involution on diagrams.
SetPartitionDiagram involute(const SetPartitionDiagram& x);

// Number of blocks meeting both rows.
int propagating_number(const SetPartitionDiagram& x);

bool is_brauer_diagram(const SetPartitionDiagram& d);
bool is_permutation_diagram(const SetPartitionDiagram& d);
bool is_half_level_member(const SetPartitionDiagram& d);

// Complete duplicate-free basis of the family's algebra at the level, in a
// fixed deterministic order.  Brauer and symmetric towers step by whole
// integers, so odd twice_level is rejected for them.
std::vector<SetPartitionDiagram> enumerate_diagrams(Family f, int twice_level);

// Canonical text form, e.g. {1,2'}{2,1'}; the apostrophe marks northern points.
std::string diagram_str(const SetPartitionDiagram& d);
SetPartitionDiagram parse_diagram(const std::string& s, int twice_level);

// Small union-find used by the gluing routines.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace skewcell
