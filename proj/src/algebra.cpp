#include "skewcell/algebra.hpp"

#include <stdexcept>

namespace skewcell {

TowerConfig::TowerConfig(Family f, long n_value, int max_tl)
    : family(f), n(n_value), max_twice_level(max_tl) {
    if (max_tl < 0) throw std::invalid_argument("negative max_twice_level");
    if (f != Family::symmetric && n < default_n(max_tl))
        throw std::invalid_argument("loop parameter n must be at least 2*ceil(max_level) = " +
                                    std::to_string(default_n(max_tl)));
}

AlgebraElement AlgebraElement::from_diagram(const SetPartitionDiagram& d, const Rational& c) {
    AlgebraElement e;
    e.twice_level = d.twice_level;
    if (c != 0) e.terms[d] = c;
    return e;
}

AlgebraElement AlgebraElement::unit(int twice_level) {
    return from_diagram(identity_diagram(twice_level));
}

void AlgebraElement::add_term(const SetPartitionDiagram& d, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(d);
    if (it == terms.end()) {
        terms.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.twice_level != y.twice_level) throw std::invalid_argument("sum: twice_level mismatch");
    AlgebraElement z = x;
    for (const auto& [d, c] : y.terms) z.add_term(d, c);
    return z;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.twice_level != y.twice_level) throw std::invalid_argument("difference: twice_level mismatch");
    AlgebraElement z = x;
    for (const auto& [d, c] : y.terms) z.add_term(d, -c);
    return z;
}

AlgebraElement operator*(const Rational& c, const AlgebraElement& x) {
    AlgebraElement z = AlgebraElement::zero(x.twice_level);
    if (c == 0) return z;
    for (const auto& [d, v] : x.terms) z.terms[d] = c * v;
    return z;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y, const TowerConfig& cfg) {
    if (x.twice_level != y.twice_level) throw std::invalid_argument("multiply: twice_level mismatch");
    AlgebraElement z = AlgebraElement::zero(x.twice_level);
    for (const auto& [dx, cx] : x.terms)
        for (const auto& [dy, cy] : y.terms) {
            LoopWeightedDiagram w = compose(dx, dy);
            Rational c = cx * cy;
            if (w.loops > 0) c *= Rational(int_pow(cfg.n, static_cast<unsigned long>(w.loops)));
            z.add_term(w.diagram, c);
        }
    return z;
}

AlgebraElement involute(const AlgebraElement& x) {
    AlgebraElement z = AlgebraElement::zero(x.twice_level);
    for (const auto& [d, c] : x.terms) z.terms[involute(d)] = c;
    return z;
}

SetPartitionDiagram embed_diagram(const SetPartitionDiagram& d, int to_twice_level) {
    if (to_twice_level < d.twice_level) throw std::invalid_argument("embed: target level below source");
    int k_from = d.npoints();
    int k_to = points_at(to_twice_level);
    std::vector<std::vector<int>> blocks;
    for (uint32_t b : d.blocks) {
        std::vector<int> blk;
        for (int p = 0; p < 2 * k_from; ++p)
            if (b & (1u << p)) blk.push_back(p < k_from ? p + 1 : k_to + (p - k_from) + 1);
        blocks.push_back(std::move(blk));
    }
    for (int i = k_from + 1; i <= k_to; ++i) blocks.push_back({i, k_to + i});
    return make_diagram(to_twice_level, blocks);
}

AlgebraElement embed(const AlgebraElement& x, int from_twice_level, int to_twice_level) {
    if (x.twice_level != from_twice_level) throw std::invalid_argument("embed: source level mismatch");
    if (from_twice_level > to_twice_level)
        throw std::invalid_argument("embed: source level above target");
    AlgebraElement z = AlgebraElement::zero(to_twice_level);
    for (const auto& [d, c] : x.terms) z.terms[embed_diagram(d, to_twice_level)] = c;
    return z;
}

SetPartitionDiagram embed_top_diagram(const SetPartitionDiagram& d, int s_level, int r_level) {
    if (d.twice_level != 2 * s_level) throw std::invalid_argument("embed_top: source level mismatch");
    if (s_level > r_level || s_level < 0) throw std::invalid_argument("embed_top: levels out of order");
    int shift = r_level - s_level;
    std::vector<std::vector<int>> blocks;
    for (uint32_t b : d.blocks) {
        std::vector<int> blk;
        for (int p = 0; p < 2 * s_level; ++p)
            if (b & (1u << p))
                blk.push_back(p < s_level ? p + 1 + shift : r_level + (p - s_level) + 1 + shift);
        blocks.push_back(std::move(blk));
    }
    for (int i = 1; i <= shift; ++i) blocks.push_back({i, r_level + i});
    return make_diagram(2 * r_level, blocks);
}

AlgebraElement embed_top(const AlgebraElement& x, int s_level, int r_level) {
    AlgebraElement z = AlgebraElement::zero(2 * r_level);
    for (const auto& [d, c] : x.terms) z.terms[embed_top_diagram(d, s_level, r_level)] = c;
    return z;
}

long algebra_dimension(const TowerConfig& cfg, int twice_level) {
    return static_cast<long>(enumerate_diagrams(cfg.family, twice_level).size());
}

std::pair<AlgebraElement, Rational> essential_idempotent(const TowerConfig& cfg, int twice_level) {
    switch (cfg.family) {
        case Family::symmetric:
            throw std::invalid_argument("symmetric tower has no basic construction");
        case Family::partition: {
            if (twice_level < 2) throw std::invalid_argument("essential idempotent needs twice_level >= 2");
            int k = points_at(twice_level);
            if (twice_level % 2 == 0)
                return {AlgebraElement::from_diagram(singleton_diagram(twice_level, k)), Rational(cfg.n)};
            return {AlgebraElement::from_diagram(merge_diagram(twice_level, k - 1)), Rational(1)};
        }
        case Family::brauer: {
            if (twice_level < 4 || twice_level % 2 != 0)
                throw std::invalid_argument("brauer essential idempotent needs even twice_level >= 4");
            int k = twice_level / 2;
            return {AlgebraElement::from_diagram(cupcap_diagram(twice_level, k - 1)), Rational(cfg.n)};
        }
    }
    throw std::logic_error("unreachable");
}

SetPartitionDiagram transposition_diagram(int twice_level, int i) {
    int k = points_at(twice_level);
    if (i < 1 || i + 1 > k) throw std::invalid_argument("transposition index out of range");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; ++j) {
        if (j == i)
            blocks.push_back({j, k + i + 1});
        else if (j == i + 1)
            blocks.push_back({j, k + i});
        else
            blocks.push_back({j, k + j});
    }
    return make_diagram(twice_level, blocks);
}

SetPartitionDiagram singleton_diagram(int twice_level, int i) {
    int k = points_at(twice_level);
    if (i < 1 || i > k) throw std::invalid_argument("singleton index out of range");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; ++j) {
        if (j == i) {
            blocks.push_back({j});
            blocks.push_back({k + j});
        } else {
            blocks.push_back({j, k + j});
        }
    }
    return make_diagram(twice_level, blocks);
}

SetPartitionDiagram merge_diagram(int twice_level, int i) {
    int k = points_at(twice_level);
    if (i < 1 || i + 1 > k) throw std::invalid_argument("merge index out of range");
    std::vector<std::vector<int>> blocks;
    blocks.push_back({i, i + 1, k + i, k + i + 1});
    for (int j = 1; j <= k; ++j)
        if (j != i && j != i + 1) blocks.push_back({j, k + j});
    return make_diagram(twice_level, blocks);
}

SetPartitionDiagram cupcap_diagram(int twice_level, int i) {
    int k = points_at(twice_level);
    if (i < 1 || i + 1 > k) throw std::invalid_argument("cup-cap index out of range");
    std::vector<std::vector<int>> blocks;
    blocks.push_back({i, i + 1});
    blocks.push_back({k + i, k + i + 1});
    for (int j = 1; j <= k; ++j)
        if (j != i && j != i + 1) blocks.push_back({j, k + j});
    return make_diagram(twice_level, blocks);
}

std::vector<SetPartitionDiagram> generators(Family f, int twice_level) {
    if (f != Family::partition && twice_level % 2 != 0)
        throw std::invalid_argument("odd twice_level is only valid for the partition family");
    std::vector<SetPartitionDiagram> out;
    int k = points_at(twice_level);
    switch (f) {
        case Family::symmetric:
            for (int i = 1; i < k; ++i) out.push_back(transposition_diagram(twice_level, i));
            break;
        case Family::brauer:
            for (int i = 1; i < k; ++i) out.push_back(transposition_diagram(twice_level, i));
            for (int i = 1; i < k; ++i) out.push_back(cupcap_diagram(twice_level, i));
            break;
        case Family::partition: {
            // At odd twice_level the algebra sits on k points with the last
            // strand pinned; it is generated by the next lower whole level
            // together with the merge reaching into the pinned strand.
            int whole = (twice_level % 2 == 0) ? k : k - 1;
            for (int i = 1; i < whole; ++i) out.push_back(transposition_diagram(twice_level, i));
            for (int i = 1; i <= whole; ++i) out.push_back(singleton_diagram(twice_level, i));
            for (int i = 1; i <= k - 1; ++i) out.push_back(merge_diagram(twice_level, i));
            break;
        }
    }
    return out;
}

}  // namespace skewcell
