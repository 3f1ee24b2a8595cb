#include "skewcell/branching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace skewcell {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::degree() const {
    int d = 0;
    for (int p : parts) d += p;
    return d;
}

std::string Partition::str() const {
    if (parts.empty()) return "[]";
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "[]") return Partition{};
    std::vector<int> parts;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        parts.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> add_node_results(const Partition& p) {
    std::vector<Partition> out;
    size_t rows = p.parts.size();
    for (size_t i = 0; i <= rows; ++i) {
        int cur = (i < rows) ? p.parts[i] : 0;
        int above = (i == 0) ? cur + 1 : p.parts[i - 1];
        if (cur + 1 > above) continue;
        Partition q = p;
        if (i < rows)
            q.parts[i] += 1;
        else
            q.parts.push_back(1);
        out.push_back(std::move(q));
    }
    // Adding higher rows first already gives descending lexicographic order.
    return out;
}

std::vector<Partition> remove_node_results(const Partition& p) {
    std::vector<Partition> out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        int below = (i + 1 < p.parts.size()) ? p.parts[i + 1] : 0;
        if (p.parts[i] - 1 < below) continue;
        Partition q = p;
        q.parts[i] -= 1;
        if (q.parts[i] == 0) q.parts.pop_back();
        out.push_back(std::move(q));
    }
    return out;
}

bool dominates(const Partition& x, const Partition& y) {
    if (x.degree() != y.degree()) return false;
    int sx = 0, sy = 0;
    size_t n = std::max(x.parts.size(), y.parts.size());
    for (size_t i = 0; i < n; ++i) {
        sx += (i < x.parts.size()) ? x.parts[i] : 0;
        sy += (i < y.parts.size()) ? y.parts[i] : 0;
        if (sx < sy) return false;
    }
    return true;
}

bool vertex_geq(const Partition& x, const Partition& y) {
    if (x == y) return true;
    if (x.degree() != y.degree()) return x.degree() > y.degree();
    return dominates(x, y);
}

bool vertex_gt(const Partition& x, const Partition& y) { return x != y && vertex_geq(x, y); }

bool vertex_total_less(const Partition& x, const Partition& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.parts < y.parts;
}

bool vertex_list_less(const Partition& x, const Partition& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.parts > y.parts;  // lexicographic descending within a degree
}

bool valid_vertex(Family f, int twice_level, const Partition& p) {
    if (twice_level < 0) return false;
    int deg = p.degree();
    switch (f) {
        case Family::partition:
            return deg <= twice_level / 2;
        case Family::brauer:
            return twice_level % 2 == 0 && deg <= twice_level / 2 && (twice_level / 2 - deg) % 2 == 0;
        case Family::symmetric:
            return twice_level % 2 == 0 && deg == twice_level / 2;
    }
    return false;
}

std::vector<Partition> young_edges(const Partition& p) { return add_node_results(p); }

std::vector<Partition> reflected_edges(Family f, int twice_level, const Partition& p) {
    if (!valid_vertex(f, twice_level, p))
        throw std::invalid_argument("invalid vertex " + p.str() + " at twice_level " +
                                    std::to_string(twice_level));
    std::vector<Partition> out;
    switch (f) {
        case Family::symmetric:
            return young_edges(p);
        case Family::brauer: {
            out = add_node_results(p);
            for (auto& q : remove_node_results(p)) out.push_back(std::move(q));
            return out;
        }
        case Family::partition: {
            // Integer-to-half steps go down (stay or remove a node); the
            // half-to-integer steps go up (stay or add a node).
            out.push_back(p);
            if (twice_level % 2 == 0)
                for (auto& q : remove_node_results(p)) out.push_back(std::move(q));
            else
                for (auto& q : add_node_results(p)) out.push_back(std::move(q));
            return out;
        }
    }
    return out;
}

std::vector<Partition> vertices(Family f, int twice_level) {
    if (twice_level < 0) throw std::invalid_argument("negative twice_level");
    if (f != Family::partition && twice_level % 2 != 0)
        throw std::invalid_argument("odd twice_level is only valid for the partition family");
    std::vector<Partition> cur{Partition{}};
    for (int tl = 0; tl < twice_level; tl += level_step(f)) {
        std::vector<Partition> next;
        for (const auto& v : cur)
            for (auto& w : reflected_edges(f, tl, v))
                if (std::find(next.begin(), next.end(), w) == next.end()) next.push_back(std::move(w));
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end(), vertex_list_less);
    return cur;
}

std::string path_str(const PathTableau& t) {
    std::string s;
    for (size_t i = 0; i < t.verts.size(); ++i) {
        if (i) s += " -> ";
        s += t.verts[i].str();
    }
    return s;
}

std::vector<PathTableau> paths(Family f, const Partition& from, int from_twice_level,
                               const Partition& to, int to_twice_level) {
    if (!valid_vertex(f, from_twice_level, from) || !valid_vertex(f, to_twice_level, to))
        throw std::invalid_argument("paths: invalid endpoint vertex");
    if (from_twice_level > to_twice_level) throw std::invalid_argument("paths: levels out of order");
    std::vector<PathTableau> out;
    PathTableau cur;
    cur.family = f;
    cur.start_twice_level = from_twice_level;
    cur.verts.push_back(from);
    std::function<void(int)> rec = [&](int tl) {
        if (tl == to_twice_level) {
            if (cur.verts.back() == to) out.push_back(cur);
            return;
        }
        for (const auto& w : reflected_edges(f, tl, cur.verts.back())) {
            cur.verts.push_back(w);
            rec(tl + level_step(f));
            cur.verts.pop_back();
        }
    };
    rec(from_twice_level);
    std::sort(out.begin(), out.end(), revlex_total_less);
    return out;
}

long path_count(Family f, const Partition& from, int from_twice_level, const Partition& to,
                int to_twice_level) {
    if (!valid_vertex(f, from_twice_level, from) || !valid_vertex(f, to_twice_level, to))
        throw std::invalid_argument("path_count: invalid endpoint vertex");
    if (from_twice_level > to_twice_level) throw std::invalid_argument("path_count: levels out of order");
    std::map<Partition, long> counts{{from, 1}};
    for (int tl = from_twice_level; tl < to_twice_level; tl += level_step(f)) {
        std::map<Partition, long> next;
        for (const auto& [v, c] : counts)
            for (const auto& w : reflected_edges(f, tl, v)) next[w] += c;
        counts = std::move(next);
    }
    auto it = counts.find(to);
    return it == counts.end() ? 0 : it->second;
}

std::map<Partition, long> dimension_table(Family f, int twice_level) {
    std::map<Partition, long> counts{{Partition{}, 1}};
    for (int tl = 0; tl < twice_level; tl += level_step(f)) {
        std::map<Partition, long> next;
        for (const auto& [v, c] : counts)
            for (const auto& w : reflected_edges(f, tl, v)) next[w] += c;
        counts = std::move(next);
    }
    return counts;
}

namespace {

void require_same_shape(const PathTableau& s, const PathTableau& t) {
    if (s.family != t.family || s.start_twice_level != t.start_twice_level ||
        s.verts.size() != t.verts.size() || s.verts.front() != t.verts.front() ||
        s.verts.back() != t.verts.back())
        throw std::invalid_argument("path order: shape mismatch");
}

}  // namespace

bool dominance_leq(const PathTableau& s, const PathTableau& t) {
    require_same_shape(s, t);
    for (size_t i = 0; i < s.verts.size(); ++i)
        if (!vertex_geq(t.verts[i], s.verts[i])) return false;
    return true;
}

bool revlex_leq(const PathTableau& s, const PathTableau& t) {
    require_same_shape(s, t);
    for (size_t i = s.verts.size(); i-- > 0;)
        if (s.verts[i] != t.verts[i]) return vertex_gt(t.verts[i], s.verts[i]);
    return true;  // equal paths
}

bool suffix_dominance_gt(const PathTableau& s, const PathTableau& t, int from_step) {
    if (s.verts.size() != t.verts.size()) throw std::invalid_argument("suffix order: length mismatch");
    bool strict = false;
    for (size_t i = static_cast<size_t>(std::max(from_step, 0)); i < s.verts.size(); ++i) {
        if (!vertex_geq(s.verts[i], t.verts[i])) return false;
        if (s.verts[i] != t.verts[i]) strict = true;
    }
    return strict;
}

bool revlex_total_less(const PathTableau& s, const PathTableau& t) {
    for (size_t i = std::min(s.verts.size(), t.verts.size()); i-- > 0;)
        if (s.verts[i] != t.verts[i]) return vertex_total_less(s.verts[i], t.verts[i]);
    return s.verts.size() < t.verts.size();
}

bool squared_dim_identity(Family f, int twice_level) {
    auto table = dimension_table(f, twice_level);
    long lhs = 0;
    for (const auto& [v, c] : table) lhs += c * c;
    return lhs == static_cast<long>(enumerate_diagrams(f, twice_level).size());
}

nlohmann::json graph_json(Family f, int max_twice_level) {
    nlohmann::json levels = nlohmann::json::array();
    std::vector<Partition> prev;
    for (int tl = 0; tl <= max_twice_level; tl += level_step(f)) {
        auto verts = vertices(f, tl);
        nlohmann::json rec;
        rec["level"] = (tl % 2 == 0) ? nlohmann::json(tl / 2) : nlohmann::json(tl / 2.0);
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : verts) vs.push_back(v.str());
        rec["vertices"] = vs;
        nlohmann::json edges = nlohmann::json::array();
        if (tl > 0)
            for (const auto& v : prev)
                for (const auto& w : reflected_edges(f, tl - level_step(f), v))
                    edges.push_back(nlohmann::json::array({v.str(), w.str()}));
        rec["edges"] = edges;
        levels.push_back(std::move(rec));
        prev = std::move(verts);
    }
    return levels;
}

}  // namespace skewcell
