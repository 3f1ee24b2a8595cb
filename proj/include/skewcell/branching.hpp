#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewcell/diagrams.hpp"

#include <json.hpp>

namespace skewcell {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int degree() const;
    bool empty() const { return parts.empty(); }
    int first() const { return parts.empty() ? 0 : parts.front(); }

    // Comma-joined parts; the empty partition renders as "[]".
    std::string str() const;

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts == y.parts; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    friend bool operator<(const Partition& x, const Partition& y) { return x.parts < y.parts; }
};

Partition parse_partition(const std::string& s);

// Partitions obtained by adding (removing) one node, in descending
// lexicographic order.
std::vector<Partition> add_node_results(const Partition& p);
std::vector<Partition> remove_node_results(const Partition& p);

// Dominance of partitions of equal degree (partial order).
bool dominates(const Partition& x, const Partition& y);

// Order on branching-graph vertices at a fixed level: x above y iff the
// degree is larger, or degrees tie and x dominates y.  Larger degree means
// fewer reflections, matching the l-grading of the reflection construction.
bool vertex_geq(const Partition& x, const Partition& y);
bool vertex_gt(const Partition& x, const Partition& y);

// Total refinement of vertex_geq used for deterministic output and
// tie-breaking: degree first, then lexicographic.
bool vertex_total_less(const Partition& x, const Partition& y);

// Listing order for vertex tables: degree ascending, lexicographic
// descending within a degree.
bool vertex_list_less(const Partition& x, const Partition& y);

bool valid_vertex(Family f, int twice_level, const Partition& p);

std::vector<Partition> young_edges(const Partition& p);

// Outgoing edges from a valid vertex at twice_level, to twice_level + step.
std::vector<Partition> reflected_edges(Family f, int twice_level, const Partition& p);

std::vector<Partition> vertices(Family f, int twice_level);

// A path in the branching graph; a path from level 0 is a standard tableau,
// a path from level a > 0 a skew tableau.  Steps are whole levels for the
// brauer and symmetric towers and half levels for the partition tower.
struct PathTableau {
    Family family = Family::partition;
    int start_twice_level = 0;
    std::vector<Partition> verts;

    int steps() const { return static_cast<int>(verts.size()) - 1; }
    int end_twice_level() const { return start_twice_level + steps() * level_step(family); }
    const Partition& at_step(int j) const { return verts.at(j); }
    const Partition& last() const { return verts.back(); }

    friend bool operator==(const PathTableau& x, const PathTableau& y) {
        return x.family == y.family && x.start_twice_level == y.start_twice_level && x.verts == y.verts;
    }
    friend bool operator<(const PathTableau& x, const PathTableau& y) {
        if (x.start_twice_level != y.start_twice_level) return x.start_twice_level < y.start_twice_level;
        return x.verts < y.verts;
    }
};

std::string path_str(const PathTableau& t);

// All paths from 'from' at from_twice_level to 'to' at to_twice_level,
// emitted in reverse-lexicographic order (ties broken by the total vertex
// order).  Duplicate-free by construction.
std::vector<PathTableau> paths(Family f, const Partition& from, int from_twice_level,
                               const Partition& to, int to_twice_level);

long path_count(Family f, const Partition& from, int from_twice_level, const Partition& to,
                int to_twice_level);

// dim tables: vertex -> number of paths from the empty partition at level 0.
std::map<Partition, long> dimension_table(Family f, int twice_level);

// Path orders on equal-shaped tableaux.  Dominance compares vertices at
// every level; reverse-lexicographic compares at the last differing level.
bool dominance_leq(const PathTableau& s, const PathTableau& t);
bool revlex_leq(const PathTableau& s, const PathTableau& t);

// Strict dominance of the suffixes starting at step from_step.
bool suffix_dominance_gt(const PathTableau& s, const PathTableau& t, int from_step);

// Total path order refining revlex; used for deterministic emission.
bool revlex_total_less(const PathTableau& s, const PathTableau& t);

// sum over vertices of (number of standard tableaux)^2 == dim of the algebra.
bool squared_dim_identity(Family f, int twice_level);

// Per-level graph records {level, vertices, edges} with edges joining the
// previous level to this one.  Partitions serialize as comma-joined parts.
nlohmann::json graph_json(Family f, int max_twice_level);

}  // namespace skewcell
