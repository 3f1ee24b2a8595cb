#include "skewcell/skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcell {

namespace {

void require_skew_setup(const TowerConfig& cfg, const Partition& lambda, const Partition& nu,
                        int r_level, int s_level) {
    if (s_level < 0 || s_level > r_level) throw std::invalid_argument("levels out of order");
    if (2 * r_level > cfg.max_twice_level)
        throw std::invalid_argument("tower configuration too small for level r");
    if (!valid_vertex(cfg.family, 2 * (r_level - s_level), lambda))
        throw std::invalid_argument("invalid lambda at level r-s");
    if (!valid_vertex(cfg.family, 2 * r_level, nu)) throw std::invalid_argument("invalid nu at level r");
}

bool stable_under(const Subspace& v, const Matrix& action) {
    for (int i = 0; i < v.basis.rows; ++i)
        if (!v.contains(row_times(v.basis.row(i), action))) return false;
    return true;
}

}  // namespace

std::pair<Subspace, Subspace> m_and_u(const TowerConfig& cfg, const Partition& lambda,
                                      const Partition& nu, int r_level, int s_level) {
    require_skew_setup(cfg, lambda, nu, r_level, s_level);
    if (path_count(cfg.family, lambda, 2 * (r_level - s_level), nu, 2 * r_level) == 0)
        throw std::invalid_argument("empty skew shape");
    CellModule n = cell_module(cfg, 2 * r_level, nu);
    int sub_tl = 2 * (r_level - s_level);
    Subspace m = Subspace::zero(n.dim());
    Subspace u = Subspace::zero(n.dim());
    for (const auto& [vert, iso] : isotypic_components(n, sub_tl)) {
        if (vertex_geq(vert, lambda)) m = sum(m, iso);
        if (vertex_gt(vert, lambda)) u = sum(u, iso);
    }
    // stability under both factors of the bottom-times-top subalgebra
    for (const auto& g : generators(cfg.family, sub_tl)) {
        Matrix act = diagram_action(n, embed_diagram(g, n.twice_level));
        if (!stable_under(m, act) || !stable_under(u, act))
            throw std::runtime_error("span not stable under the restricted action");
    }
    for (const auto& g : generators(cfg.family, 2 * s_level)) {
        Matrix act = diagram_action(n, embed_top_diagram(g, s_level, r_level));
        if (!stable_under(m, act) || !stable_under(u, act))
            throw std::runtime_error("span not stable under the top action");
    }
    return {std::move(m), std::move(u)};
}

PathTableau maximal_path(Family f, const Partition& lambda, int twice_level) {
    auto all = paths(f, Partition{}, 0, lambda, twice_level);
    if (all.empty()) throw std::invalid_argument("no standard tableaux of the requested shape");
    std::vector<size_t> maximal;
    for (size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < all.size() && !dominated; ++j)
            if (i != j && dominance_leq(all[i], all[j]) && !(all[i] == all[j])) dominated = true;
        if (!dominated) maximal.push_back(i);
    }
    size_t best = maximal.front();
    for (size_t i : maximal)
        if (revlex_total_less(all[best], all[i])) best = i;
    return all[best];
}

SkewModule skew_module(const TowerConfig& cfg, const Partition& lambda, const Partition& nu,
                       int r_level, int s_level, const std::optional<PathTableau>& prefix_override) {
    require_skew_setup(cfg, lambda, nu, r_level, s_level);
    long expected = path_count(cfg.family, lambda, 2 * (r_level - s_level), nu, 2 * r_level);
    if (expected == 0) throw std::invalid_argument("empty skew shape");
    SkewModule sm;
    sm.cfg = cfg;
    sm.lambda = lambda;
    sm.nu = nu;
    sm.r_level = r_level;
    sm.s_level = s_level;
    sm.prefix = prefix_override ? *prefix_override
                                : maximal_path(cfg.family, lambda, 2 * (r_level - s_level));
    if (!(sm.prefix.last() == lambda) || sm.prefix.end_twice_level() != 2 * (r_level - s_level))
        throw std::invalid_argument("prefix path does not reach lambda at level r-s");

    CellModule n = cell_module(cfg, 2 * r_level, nu);
    sm.carrier = prefix_subspace(n, sm.prefix);
    if (static_cast<long>(sm.carrier.dim()) != expected)
        throw std::runtime_error("skew carrier dimension " + std::to_string(sm.carrier.dim()) +
                                 ", expected " + std::to_string(expected));
    sm.gens = generators(cfg.family, 2 * s_level);
    for (const auto& g : sm.gens) {
        Matrix act = diagram_action(n, embed_top_diagram(g, s_level, r_level));
        Matrix restricted(sm.carrier.dim(), sm.carrier.dim());
        for (int i = 0; i < sm.carrier.dim(); ++i) {
            auto coords = sm.carrier.coordinates(row_times(sm.carrier.basis.row(i), act));
            if (!coords) throw std::runtime_error("carrier is not stable under " + diagram_str(g));
            for (int j = 0; j < sm.carrier.dim(); ++j) restricted.at(i, j) = (*coords)[j];
        }
        sm.gen_action.push_back(std::move(restricted));
    }
    return sm;
}

Matrix skew_action(const SkewModule& sm, const SetPartitionDiagram& d) {
    if (d.twice_level != 2 * sm.s_level) throw std::invalid_argument("skew action: level mismatch");
    CellModule n = cell_module(sm.cfg, 2 * sm.r_level, sm.nu);
    Matrix act = diagram_action(n, embed_top_diagram(d, sm.s_level, sm.r_level));
    Matrix restricted(sm.carrier.dim(), sm.carrier.dim());
    for (int i = 0; i < sm.carrier.dim(); ++i) {
        auto coords = sm.carrier.coordinates(row_times(sm.carrier.basis.row(i), act));
        if (!coords) throw std::runtime_error("carrier is not stable under " + diagram_str(d));
        for (int j = 0; j < sm.carrier.dim(); ++j) restricted.at(i, j) = (*coords)[j];
    }
    return restricted;
}

std::map<Partition, long> filtration_multiplicities(const TowerConfig& cfg, const Partition& nu,
                                                    int r_twice_level, int sub_twice_level) {
    CellModule n = cell_module(cfg, r_twice_level, nu);
    std::map<Partition, long> out;
    for (const auto& [vert, iso] : isotypic_components(n, sub_twice_level)) {
        long ddim =
            static_cast<long>(enumerate_half_diagrams(cfg.family, sub_twice_level, vert.degree()).size()) *
            tableau_count(vert);
        if (ddim == 0) continue;
        if (iso.dim() % ddim != 0)
            throw std::runtime_error("isotypic dimension " + std::to_string(iso.dim()) +
                                     " is not a multiple of dim Delta(" + vert.str() + ")");
        out[vert] = iso.dim() / ddim;
    }
    return out;
}

}  // namespace skewcell
