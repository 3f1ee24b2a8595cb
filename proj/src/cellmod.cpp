#include "skewcell/cellmod.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <stdexcept>

namespace skewcell {

int HalfDiagram::special_block() const {
    if (twice_level % 2 == 0) return -1;
    int k = npoints();
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i] & (1u << (k - 1))) return static_cast<int>(i);
    return -1;
}

std::vector<int> HalfDiagram::prop_indices(bool include_special) const {
    int sp = special_block();
    std::vector<int> out;
    for (size_t i = 0; i < blocks.size(); ++i)
        if (prop[i] && (include_special || static_cast<int>(i) != sp)) out.push_back(static_cast<int>(i));
    return out;
}

std::string HalfDiagram::str() const {
    std::string s;
    for (size_t i = 0; i < blocks.size(); ++i) {
        s += "{";
        bool first = true;
        for (int p = 0; p < npoints(); ++p)
            if (blocks[i] & (1u << p)) {
                if (!first) s += ",";
                s += std::to_string(p + 1);
                first = false;
            }
        s += "}";
        if (prop[i]) s += "*";
    }
    return s.empty() ? "{}" : s;
}

namespace {

void sort_half_blocks(HalfDiagram& h) {
    std::vector<size_t> order(h.blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::countr_zero(h.blocks[a]) < std::countr_zero(h.blocks[b]);
    });
    std::vector<uint32_t> blocks;
    std::vector<char> prop;
    for (size_t i : order) {
        blocks.push_back(h.blocks[i]);
        prop.push_back(h.prop[i]);
    }
    h.blocks = std::move(blocks);
    h.prop = std::move(prop);
}

void enumerate_point_partitions(int npts, const std::function<void(const std::vector<uint32_t>&)>& emit) {
    std::vector<uint32_t> blocks;
    std::function<void(int)> rec = [&](int p) {
        if (p == npts) {
            emit(blocks);
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            blocks[b] |= 1u << p;
            rec(p + 1);
            blocks[b] &= ~(1u << p);
        }
        blocks.push_back(1u << p);
        rec(p + 1);
        blocks.pop_back();
    };
    rec(0);
}

void choose_subsets(int n, int m, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == m) {
            emit(pick);
            return;
        }
        for (int i = from; i < n; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::vector<HalfDiagram> enumerate_half_diagrams(Family f, int twice_level, int nprop) {
    if (twice_level < 0 || nprop < 0) throw std::invalid_argument("bad half-diagram parameters");
    if (f != Family::partition && twice_level % 2 != 0)
        throw std::invalid_argument("odd twice_level is only valid for the partition family");
    int k = points_at(twice_level);
    std::vector<HalfDiagram> out;
    switch (f) {
        case Family::symmetric: {
            if (nprop != k) return out;
            HalfDiagram h;
            h.twice_level = twice_level;
            for (int i = 0; i < k; ++i) {
                h.blocks.push_back(1u << i);
                h.prop.push_back(1);
            }
            out.push_back(std::move(h));
            break;
        }
        case Family::brauer: {
            if (nprop > k || (k - nprop) % 2 != 0) return out;
            // Partial matchings: arcs are non-propagating pairs, free points
            // propagate.
            std::function<void(uint32_t, std::vector<uint32_t>&)> rec =
                [&](uint32_t undecided, std::vector<uint32_t>& arcs) {
                    int used = 2 * static_cast<int>(arcs.size());
                    if (used == k - nprop) {
                        HalfDiagram h;
                        h.twice_level = twice_level;
                        for (int p = 0; p < k; ++p) {
                            bool in_arc = false;
                            for (uint32_t a : arcs)
                                if (a & (1u << p)) in_arc = true;
                            if (!in_arc) {
                                h.blocks.push_back(1u << p);
                                h.prop.push_back(1);
                            }
                        }
                        for (uint32_t a : arcs) {
                            h.blocks.push_back(a);
                            h.prop.push_back(0);
                        }
                        sort_half_blocks(h);
                        out.push_back(std::move(h));
                        return;
                    }
                    if (undecided == 0) return;
                    int lo = std::countr_zero(undecided);
                    uint32_t rest = undecided & ~(1u << lo);
                    // point lo stays free
                    rec(rest, arcs);
                    // or pairs with a later point
                    uint32_t scan = rest;
                    while (scan) {
                        int q = std::countr_zero(scan);
                        scan &= ~(1u << q);
                        arcs.push_back((1u << lo) | (1u << q));
                        rec(rest & ~(1u << q), arcs);
                        arcs.pop_back();
                    }
                };
            // The recursion above lets early points stay free, which can
            // strand too few points for the arcs; filter by arc count inside.
            std::vector<uint32_t> arcs;
            rec(k == 0 ? 0u : ((1u << k) - 1), arcs);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
        }
        case Family::partition: {
            bool odd = twice_level % 2 != 0;
            enumerate_point_partitions(k, [&](const std::vector<uint32_t>& blocks) {
                int nb = static_cast<int>(blocks.size());
                int sp = -1;
                if (odd) {
                    for (int i = 0; i < nb; ++i)
                        if (blocks[i] & (1u << (k - 1))) sp = i;
                }
                std::vector<int> free_idx;
                for (int i = 0; i < nb; ++i)
                    if (i != sp) free_idx.push_back(i);
                choose_subsets(static_cast<int>(free_idx.size()), nprop, [&](const std::vector<int>& pick) {
                    HalfDiagram h;
                    h.twice_level = twice_level;
                    h.blocks = blocks;
                    h.prop.assign(nb, 0);
                    if (sp >= 0) h.prop[sp] = 1;
                    for (int j : pick) h.prop[free_idx[j]] = 1;
                    out.push_back(std::move(h));
                });
            });
            std::sort(out.begin(), out.end());
            break;
        }
    }
    return out;
}

std::optional<GlueResult> glue_action(const HalfDiagram& v, const SetPartitionDiagram& d) {
    if (v.twice_level != d.twice_level) throw std::invalid_argument("glue: twice_level mismatch");
    int k = v.npoints();
    // Slots 0..k-1: middle (v's points = d's northern points); k..2k-1: d's
    // southern points, which carry the output.
    Dsu dsu(2 * k);
    auto unite_bits = [&](uint32_t mask, bool is_full_diagram) {
        int first = -1;
        for (int p = 0; p < 2 * k; ++p) {
            if (!(mask & (1u << p))) continue;
            int slot;
            if (!is_full_diagram)
                slot = p;  // v lives on the middle
            else
                slot = (p < k) ? k + p : p - k;
            if (first < 0)
                first = slot;
            else
                dsu.unite(first, slot);
        }
    };
    for (uint32_t b : v.blocks) unite_bits(b, false);
    for (uint32_t b : d.blocks) unite_bits(b, true);

    std::vector<int> south_count(2 * k, 0), middle_count(2 * k, 0), prop_count(2 * k, 0);
    for (int s = 0; s < 2 * k; ++s) {
        int r = dsu.find(s);
        if (s < k)
            ++middle_count[r];
        else
            ++south_count[r];
    }
    int sp = v.special_block();
    for (size_t i = 0; i < v.blocks.size(); ++i) {
        if (!v.prop[i]) continue;
        int r = dsu.find(std::countr_zero(v.blocks[i]));
        ++prop_count[r];
    }
    // A propagating block that merges with another or misses the southern
    // row lowers the propagating count: the cell module sees zero.
    for (int r = 0; r < 2 * k; ++r) {
        if (dsu.find(r) != r) continue;
        if (prop_count[r] >= 2) return std::nullopt;
        if (prop_count[r] == 1 && south_count[r] == 0) return std::nullopt;
    }
    GlueResult res;
    res.half.twice_level = v.twice_level;
    std::vector<uint32_t> mask_of(2 * k, 0);
    for (int p = 0; p < k; ++p) mask_of[dsu.find(k + p)] |= 1u << p;
    std::vector<int> block_root;
    for (int r = 0; r < 2 * k; ++r) {
        if (dsu.find(r) != r) continue;
        if (south_count[r] > 0) {
            res.half.blocks.push_back(mask_of[r]);
            res.half.prop.push_back(prop_count[r] == 1);
            block_root.push_back(r);
        } else if (prop_count[r] == 0 && middle_count[r] > 0) {
            ++res.loops;
        }
    }
    // canonical order, keeping track of roots for the propagating bijection
    std::vector<size_t> order(res.half.blocks.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::countr_zero(res.half.blocks[a]) < std::countr_zero(res.half.blocks[b]);
    });
    HalfDiagram sorted;
    sorted.twice_level = res.half.twice_level;
    std::vector<int> roots;
    for (size_t i : order) {
        sorted.blocks.push_back(res.half.blocks[i]);
        sorted.prop.push_back(res.half.prop[i]);
        roots.push_back(block_root[i]);
    }
    res.half = std::move(sorted);

    // old non-pinned propagating block -> new position
    int new_sp = res.half.special_block();
    std::vector<int> new_prop_roots;
    for (size_t i = 0; i < res.half.blocks.size(); ++i)
        if (res.half.prop[i] && static_cast<int>(i) != new_sp) new_prop_roots.push_back(roots[i]);
    for (size_t i = 0; i < v.blocks.size(); ++i) {
        if (!v.prop[i] || static_cast<int>(i) == sp) continue;
        int r = dsu.find(std::countr_zero(v.blocks[i]));
        auto it = std::find(new_prop_roots.begin(), new_prop_roots.end(), r);
        if (it == new_prop_roots.end()) throw std::logic_error("propagating block lost its component");
        res.prop_map.push_back(static_cast<int>(it - new_prop_roots.begin()));
    }
    return res;
}

CellModule cell_module(const TowerConfig& cfg, int twice_level, const Partition& shape) {
    if (twice_level > cfg.max_twice_level)
        throw std::invalid_argument("twice_level exceeds tower configuration");
    if (!valid_vertex(cfg.family, twice_level, shape))
        throw std::invalid_argument("invalid vertex " + shape.str() + " at twice_level " +
                                    std::to_string(twice_level));
    CellModule m;
    m.cfg = cfg;
    m.twice_level = twice_level;
    m.shape = shape;
    m.halves = enumerate_half_diagrams(cfg.family, twice_level, shape.degree());
    m.rep = seminormal_rep(shape);
    m.gens = generators(cfg.family, twice_level);
    for (const auto& g : m.gens) m.gen_action.push_back(diagram_action(m, g));
    return m;
}

Matrix diagram_action(const CellModule& m, const SetPartitionDiagram& d) {
    if (d.twice_level != m.twice_level) throw std::invalid_argument("action: twice_level mismatch");
    int dim = m.dim();
    int sd = m.rep.dim;
    Matrix out(dim, dim);
    for (size_t h = 0; h < m.halves.size(); ++h) {
        auto res = glue_action(m.halves[h], d);
        if (!res) continue;
        auto it = std::lower_bound(m.halves.begin(), m.halves.end(), res->half);
        if (it == m.halves.end() || !(*it == res->half))
            throw std::logic_error("glued half diagram escaped the basis");
        int h2 = static_cast<int>(it - m.halves.begin());
        Rational scale(int_pow(m.cfg.n, static_cast<unsigned long>(res->loops)));
        // tableau factor twists by the inverse of the propagating relocation
        std::vector<int> perm(res->prop_map.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = res->prop_map[i] + 1;
        Matrix tw = perm_action(m.rep, inverse_perm(perm));
        for (int a = 0; a < sd; ++a)
            for (int b = 0; b < sd; ++b)
                if (tw.at(a, b) != 0) out.at(m.basis_index(static_cast<int>(h), a),
                                             m.basis_index(h2, b)) = scale * tw.at(a, b);
    }
    return out;
}

Matrix element_action(const CellModule& m, const AlgebraElement& x) {
    Matrix out(m.dim(), m.dim());
    for (const auto& [d, c] : x.terms) out = out + c * diagram_action(m, d);
    return out;
}

CheckReport representation_check(const CellModule& m, long trials, uint64_t seed) {
    auto basis = enumerate_diagrams(m.cfg.family, m.twice_level);
    long nb = static_cast<long>(basis.size());
    std::vector<Matrix> rho;
    rho.reserve(basis.size());
    for (const auto& d : basis) rho.push_back(diagram_action(m, d));
    auto check_pair = [&](long i, long j) -> bool {
        LoopWeightedDiagram z = compose(basis[i], basis[j]);
        auto zt = std::lower_bound(basis.begin(), basis.end(), z.diagram);
        Matrix rhs = Rational(int_pow(m.cfg.n, static_cast<unsigned long>(z.loops))) *
                     rho[static_cast<size_t>(zt - basis.begin())];
        return rho[i] * rho[j] == rhs;
    };
    if (trials <= 0 || nb * nb <= trials) {
        for (long i = 0; i < nb; ++i)
            for (long j = 0; j < nb; ++j)
                if (!check_pair(i, j))
                    return {false, "representation property fails on " + diagram_str(basis[i]) +
                                       " * " + diagram_str(basis[j])};
        return {true, std::to_string(nb * nb) + " exhaustive pairs"};
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(0, nb - 1);
    for (long t = 0; t < trials; ++t) {
        long i = pick(rng), j = pick(rng);
        if (!check_pair(i, j))
            return {false, "representation property fails on " + diagram_str(basis[i]) + " * " +
                               diagram_str(basis[j])};
    }
    return {true, std::to_string(trials) + " sampled pairs"};
}

std::vector<Matrix> restrict_action(const CellModule& m, int sub_twice_level) {
    if (sub_twice_level > m.twice_level || sub_twice_level < 0)
        throw std::invalid_argument("restrict: level out of range");
    if (m.cfg.family != Family::partition && sub_twice_level % 2 != 0)
        throw std::invalid_argument("restrict: odd twice_level for an integer-step family");
    std::vector<Matrix> out;
    for (const auto& g : generators(m.cfg.family, sub_twice_level))
        out.push_back(diagram_action(m, embed_diagram(g, m.twice_level)));
    if (out.empty()) out.push_back(Matrix::identity(m.dim()));
    return out;
}

namespace {

struct PairGlue {
    int loops = 0;
    std::vector<int> sigma;  // x's i-th non-pinned prop pairs with y's sigma[i]-th
};

std::optional<PairGlue> glue_pair(const HalfDiagram& x, const HalfDiagram& y) {
    int k = x.npoints();
    Dsu dsu(k);
    auto unite_bits = [&](uint32_t mask) {
        int first = -1;
        for (int p = 0; p < k; ++p) {
            if (!(mask & (1u << p))) continue;
            if (first < 0)
                first = p;
            else
                dsu.unite(first, p);
        }
    };
    for (uint32_t b : x.blocks) unite_bits(b);
    for (uint32_t b : y.blocks) unite_bits(b);
    std::vector<int> xp(k, 0), yp(k, 0);
    int sx = x.special_block(), sy = y.special_block();
    for (size_t i = 0; i < x.blocks.size(); ++i)
        if (x.prop[i]) ++xp[dsu.find(std::countr_zero(x.blocks[i]))];
    for (size_t i = 0; i < y.blocks.size(); ++i)
        if (y.prop[i]) ++yp[dsu.find(std::countr_zero(y.blocks[i]))];
    PairGlue out;
    for (int r = 0; r < k; ++r) {
        if (dsu.find(r) != r) continue;
        if (xp[r] != yp[r] || xp[r] > 1) return std::nullopt;
        if (xp[r] == 0) ++out.loops;
    }
    // match the non-pinned propagating blocks through shared components
    std::vector<int> y_index_of_root(k, -1);
    int yi = 0;
    for (size_t i = 0; i < y.blocks.size(); ++i) {
        if (!y.prop[i] || static_cast<int>(i) == sy) continue;
        y_index_of_root[dsu.find(std::countr_zero(y.blocks[i]))] = yi++;
    }
    for (size_t i = 0; i < x.blocks.size(); ++i) {
        if (!x.prop[i] || static_cast<int>(i) == sx) continue;
        int r = dsu.find(std::countr_zero(x.blocks[i]));
        if (y_index_of_root[r] < 0) return std::nullopt;  // pinned/non-pinned mismatch
        out.sigma.push_back(y_index_of_root[r]);
    }
    return out;
}

}  // namespace

BilinearForm invariant_form(const CellModule& m) {
    int sd = m.rep.dim;
    Matrix G = specht_gram(m.rep);
    Matrix gram(m.dim(), m.dim());
    for (size_t hx = 0; hx < m.halves.size(); ++hx)
        for (size_t hy = 0; hy < m.halves.size(); ++hy) {
            auto pg = glue_pair(m.halves[hx], m.halves[hy]);
            if (!pg) continue;
            Rational scale(int_pow(m.cfg.n, static_cast<unsigned long>(pg->loops)));
            std::vector<int> perm(pg->sigma.size());
            for (size_t i = 0; i < perm.size(); ++i) perm[i] = pg->sigma[i] + 1;
            Matrix block = perm_action(m.rep, perm) * G;
            for (int a = 0; a < sd; ++a)
                for (int b = 0; b < sd; ++b)
                    if (block.at(a, b) != 0)
                        gram.at(m.basis_index(static_cast<int>(hx), a),
                                m.basis_index(static_cast<int>(hy), b)) = scale * block.at(a, b);
        }
    return {gram};
}

nlohmann::json module_json(const CellModule& m) {
    nlohmann::json j;
    j["family"] = family_name(m.cfg.family);
    j["twice_level"] = m.twice_level;
    j["n"] = m.cfg.n;
    j["shape"] = m.shape.str();
    j["dim"] = m.dim();
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& h : m.halves)
        for (const auto& t : m.rep.tabs) {
            nlohmann::json b;
            b["half"] = h.str();
            b["tableau"] = t.rows;
            basis.push_back(std::move(b));
        }
    j["basis"] = basis;
    nlohmann::json gens = nlohmann::json::array();
    nlohmann::json action = nlohmann::json::array();
    for (size_t i = 0; i < m.gens.size(); ++i) {
        gens.push_back(diagram_str(m.gens[i]));
        nlohmann::json mat = nlohmann::json::array();
        for (int r = 0; r < m.gen_action[i].rows; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < m.gen_action[i].cols; ++c) row.push_back(rat_str(m.gen_action[i].at(r, c)));
            mat.push_back(std::move(row));
        }
        action.push_back(std::move(mat));
    }
    j["generators"] = gens;
    j["action"] = action;
    return j;
}

}  // namespace skewcell
