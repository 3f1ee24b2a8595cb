#include "skewcell/diagrams.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skewcell {

std::string family_name(Family f) {
    switch (f) {
        case Family::partition: return "partition";
        case Family::brauer: return "brauer";
        case Family::symmetric: return "symmetric";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "partition") return Family::partition;
    if (s == "brauer") return Family::brauer;
    if (s == "symmetric") return Family::symmetric;
    throw std::invalid_argument("unknown family: " + s);
}

namespace {

void sort_blocks(std::vector<uint32_t>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](uint32_t a, uint32_t b) { return std::countr_zero(a) < std::countr_zero(b); });
}

}  // namespace

SetPartitionDiagram make_diagram(int twice_level, const std::vector<std::vector<int>>& blocks) {
    SetPartitionDiagram d;
    d.twice_level = twice_level;
    int k = d.npoints();
    uint32_t seen = 0;
    for (const auto& blk : blocks) {
        if (blk.empty()) throw std::invalid_argument("empty block");
        uint32_t mask = 0;
        for (int p : blk) {
            if (p < 1 || p > 2 * k) throw std::invalid_argument("point out of range");
            uint32_t bit = 1u << (p - 1);
            if ((seen | mask) & bit) throw std::invalid_argument("point repeated across blocks");
            mask |= bit;
        }
        seen |= mask;
        d.blocks.push_back(mask);
    }
    uint32_t all = (k == 0) ? 0 : ((k == 16 ? 0xffffffffu : ((1u << (2 * k)) - 1)));
    if (seen != all) throw std::invalid_argument("blocks do not cover all points");
    sort_blocks(d.blocks);
    validate_diagram(d);
    return d;
}

void validate_diagram(const SetPartitionDiagram& d) {
    int k = d.npoints();
    uint32_t all = (k == 0) ? 0 : ((1u << (2 * k)) - 1);
    uint32_t seen = 0;
    int prev_min = -1;
    for (uint32_t b : d.blocks) {
        if (b == 0) throw std::invalid_argument("empty block");
        if (seen & b) throw std::invalid_argument("blocks not disjoint");
        seen |= b;
        int mn = std::countr_zero(b);
        if (mn <= prev_min) throw std::invalid_argument("blocks not in canonical order");
        prev_min = mn;
    }
    if (seen != all) throw std::invalid_argument("blocks do not cover all points");
    if (d.twice_level % 2 == 1 && k > 0 && !is_half_level_member(d))
        throw std::invalid_argument("half-level diagram must join K and K-bar");
}

SetPartitionDiagram identity_diagram(int twice_level) {
    SetPartitionDiagram d;
    d.twice_level = twice_level;
    int k = d.npoints();
    for (int i = 1; i <= k; ++i) d.blocks.push_back((1u << (i - 1)) | (1u << (k + i - 1)));
    return d;
}

LoopWeightedDiagram compose(const SetPartitionDiagram& x, const SetPartitionDiagram& y) {
    if (x.twice_level != y.twice_level)
        throw std::invalid_argument("compose: twice_level mismatch");
    int k = x.npoints();
    // Slots: 0..k-1 north of x, k..2k-1 middle, 2k..3k-1 south of y.
    Dsu dsu(3 * k);
    auto unite_mask = [&](uint32_t mask, int south_base, int north_base) {
        int first = -1;
        for (int p = 0; p < 2 * k; ++p) {
            if (!(mask & (1u << p))) continue;
            int slot = (p < k) ? south_base + p : north_base + (p - k);
            if (first < 0)
                first = slot;
            else
                dsu.unite(first, slot);
        }
    };
    for (uint32_t b : x.blocks) unite_mask(b, /*south=*/k, /*north=*/0);
    for (uint32_t b : y.blocks) unite_mask(b, /*south=*/2 * k, /*north=*/k);

    std::vector<uint32_t> result_mask(3 * k, 0);
    std::vector<char> has_outer(3 * k, 0), has_middle(3 * k, 0);
    for (int s = 0; s < 3 * k; ++s) {
        int r = dsu.find(s);
        if (s < k) {  // north of x -> output northern point
            result_mask[r] |= 1u << (k + s);
            has_outer[r] = 1;
        } else if (s < 2 * k) {
            has_middle[r] = 1;
        } else {  // south of y -> output southern point
            result_mask[r] |= 1u << (s - 2 * k);
            has_outer[r] = 1;
        }
    }
    LoopWeightedDiagram out;
    out.diagram.twice_level = x.twice_level;
    for (int r = 0; r < 3 * k; ++r) {
        if (dsu.find(r) != r) continue;
        if (has_outer[r])
            out.diagram.blocks.push_back(result_mask[r]);
        else if (has_middle[r])
            ++out.loops;
    }
    sort_blocks(out.diagram.blocks);
    return out;
}

SetPartitionDiagram involute(const SetPartitionDiagram& x) {
    SetPartitionDiagram d;
    d.twice_level = x.twice_level;
    int k = x.npoints();
    uint32_t south = (k == 0) ? 0 : ((1u << k) - 1);
    for (uint32_t b : x.blocks) d.blocks.push_back(((b & south) << k) | (b >> k));
    sort_blocks(d.blocks);
    return d;
}

int propagating_number(const SetPartitionDiagram& x) {
    int k = x.npoints();
    uint32_t south = (k == 0) ? 0 : ((1u << k) - 1);
    int p = 0;
    for (uint32_t b : x.blocks)
        if ((b & south) && (b >> k)) ++p;
    return p;
}

bool is_brauer_diagram(const SetPartitionDiagram& d) {
    for (uint32_t b : d.blocks)
        if (std::popcount(b) != 2) return false;
    return true;
}

bool is_permutation_diagram(const SetPartitionDiagram& d) {
    int k = d.npoints();
    uint32_t south = (k == 0) ? 0 : ((1u << k) - 1);
    for (uint32_t b : d.blocks)
        if (std::popcount(b & south) != 1 || std::popcount(b >> k) != 1) return false;
    return true;
}

bool is_half_level_member(const SetPartitionDiagram& d) {
    int k = d.npoints();
    if (k == 0) return true;
    uint32_t pair = (1u << (k - 1)) | (1u << (2 * k - 1));
    for (uint32_t b : d.blocks)
        if ((b & pair) == pair) return true;
    return false;
}

namespace {

void enumerate_set_partitions(int npts, const std::function<void(const std::vector<uint32_t>&)>& emit) {
    // Restricted-growth enumeration; blocks come out ordered by least element.
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

void enumerate_matchings(uint32_t free, std::vector<uint32_t>& blocks,
                         std::vector<SetPartitionDiagram>& out, int twice_level) {
    if (free == 0) {
        SetPartitionDiagram d;
        d.twice_level = twice_level;
        d.blocks = blocks;
        sort_blocks(d.blocks);
        out.push_back(std::move(d));
        return;
    }
    int lo = std::countr_zero(free);
    uint32_t rest = free & ~(1u << lo);
    uint32_t scan = rest;
    while (scan) {
        int q = std::countr_zero(scan);
        scan &= ~(1u << q);
        blocks.push_back((1u << lo) | (1u << q));
        enumerate_matchings(rest & ~(1u << q), blocks, out, twice_level);
        blocks.pop_back();
    }
}

}  // namespace

std::vector<SetPartitionDiagram> enumerate_diagrams(Family f, int twice_level) {
    if (twice_level < 0) throw std::invalid_argument("negative twice_level");
    if (f != Family::partition && twice_level % 2 != 0)
        throw std::invalid_argument("odd twice_level is only valid for the partition family");
    int k = points_at(twice_level);
    std::vector<SetPartitionDiagram> out;
    if (k == 0) {
        out.push_back(SetPartitionDiagram{twice_level, {}});
        return out;
    }
    switch (f) {
        case Family::partition: {
            enumerate_set_partitions(2 * k, [&](const std::vector<uint32_t>& blocks) {
                SetPartitionDiagram d;
                d.twice_level = twice_level;
                d.blocks = blocks;
                if (twice_level % 2 == 1 && !is_half_level_member(d)) return;
                out.push_back(std::move(d));
            });
            break;
        }
        case Family::brauer: {
            std::vector<uint32_t> blocks;
            enumerate_matchings((1u << (2 * k)) - 1, blocks, out, twice_level);
            break;
        }
        case Family::symmetric: {
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                SetPartitionDiagram d;
                d.twice_level = twice_level;
                for (int i = 0; i < k; ++i) d.blocks.push_back((1u << i) | (1u << (k + perm[i])));
                out.push_back(std::move(d));
            } while (std::next_permutation(perm.begin(), perm.end()));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string diagram_str(const SetPartitionDiagram& d) {
    int k = d.npoints();
    if (d.blocks.empty()) return "{}";
    std::string s;
    for (uint32_t b : d.blocks) {
        s += "{";
        bool first = true;
        for (int p = 0; p < k; ++p)
            if (b & (1u << p)) {
                if (!first) s += ",";
                s += std::to_string(p + 1);
                first = false;
            }
        for (int p = 0; p < k; ++p)
            if (b & (1u << (k + p))) {
                if (!first) s += ",";
                s += std::to_string(p + 1) + "'";
                first = false;
            }
        s += "}";
    }
    return s;
}

SetPartitionDiagram parse_diagram(const std::string& s, int twice_level) {
    std::vector<std::vector<int>> blocks;
    int k = points_at(twice_level);
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '{') throw std::invalid_argument("expected '{' in diagram literal");
        ++i;
        std::vector<int> blk;
        while (i < s.size() && s[i] != '}') {
            if (s[i] == ',') {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("expected point id in diagram literal");
            int p = std::stoi(s.substr(i, j - i));
            i = j;
            if (i < s.size() && s[i] == '\'') {
                p += k;
                ++i;
            }
            blk.push_back(p);
        }
        if (i == s.size()) throw std::invalid_argument("unterminated block in diagram literal");
        ++i;  // '}'
        if (!blk.empty()) blocks.push_back(std::move(blk));
    }
    return make_diagram(twice_level, blocks);
}

}  // namespace skewcell
