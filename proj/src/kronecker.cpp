#include "skewcell/kronecker.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "skewcell/seminormal.hpp"
#include "skewcell/skew.hpp"

namespace skewcell {

PaddedPartition::PaddedPartition(Partition b, long n_value) : base(std::move(b)), n(n_value) {
    if (n - base.degree() < base.first())
        throw std::invalid_argument("padding too small: need n >= " + std::to_string(min_padding(base)));
}

Partition PaddedPartition::padded() const {
    long head = n - base.degree();
    if (head == 0) return base;  // only possible for the empty partition at n = 0
    std::vector<int> parts{static_cast<int>(head)};
    parts.insert(parts.end(), base.parts.begin(), base.parts.end());
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

using Beta = std::vector<int>;  // strictly decreasing beta numbers

Beta beta_numbers(const Partition& p, int rows) {
    Beta b(rows);
    for (int i = 0; i < rows; ++i) {
        int part = (i < static_cast<int>(p.parts.size())) ? p.parts[i] : 0;
        b[i] = part + (rows - 1 - i);
    }
    return b;
}

long mn_rec(Beta beta, const Partition& rho, size_t idx,
                 std::map<std::pair<Beta, size_t>, long>& memo) {
    if (idx == rho.parts.size()) return 1;  // all strips removed means the empty shape
    auto key = std::make_pair(beta, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int t = rho.parts[idx];
    long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - t;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        Beta next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        // strip height parity: number of beta values jumped over
        int crossed = 0;
        for (int b : beta)
            if (b < beta[i] && b > target) ++crossed;
        long sign = (crossed % 2 == 0) ? 1 : -1;
        total += sign * mn_rec(std::move(next), rho, idx + 1, memo);
    }
    memo[key] = total;
    return total;
}

}  // namespace

long character(const Partition& lambda, const Partition& rho) {
    if (lambda.degree() != rho.degree())
        throw std::invalid_argument("character: degree mismatch between shape and cycle type");
    int n = lambda.degree();
    if (n == 0) return 1;
    int rows = std::max<int>(1, static_cast<int>(lambda.parts.size()));
    std::map<std::pair<Beta, size_t>, long> memo;
    return mn_rec(beta_numbers(lambda, rows), rho, 0, memo);
}

Integer centralizer_order(const Partition& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts) ++mult[p];
    Integer z = 1;
    for (const auto& [part, m] : mult) {
        z *= int_pow(part, static_cast<unsigned long>(m));
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

long kronecker_coefficient(const Partition& a, const Partition& b, const Partition& c) {
    int n = a.degree();
    if (b.degree() != n || c.degree() != n)
        throw std::invalid_argument("kronecker: the three partitions must share a degree");
    Rational total = 0;
    for (const auto& rho : partitions_of(n)) {
        long x = character(a, rho), y = character(b, rho), z = character(c, rho);
        if (x == 0 || y == 0 || z == 0) continue;
        total += Rational(Integer(x) * Integer(y) * Integer(z)) / Rational(centralizer_order(rho));
    }
    total.canonicalize();
    if (total.get_den() != 1 || total < 0)
        throw std::runtime_error("kronecker coefficient came out as " + rat_str(total));
    return static_cast<long>(total.get_num().get_si());
}

StableKronecker stable_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    long r = lambda.degree() + mu.degree();
    long n_min = std::max({min_padding(lambda), min_padding(mu), min_padding(nu)});
    long n_max = std::max(2 * r + 1, n_min + 1);
    StableKronecker out;
    for (long n = n_min; n <= n_max; ++n) {
        long g = kronecker_coefficient(PaddedPartition(lambda, n).padded(),
                                       PaddedPartition(mu, n).padded(),
                                       PaddedPartition(nu, n).padded());
        if (!out.sequence.empty() && g < out.sequence.back().second)
            throw std::runtime_error("padded Kronecker sequence decreased at n = " + std::to_string(n));
        out.sequence.emplace_back(n, g);
    }
    long last = out.sequence.back().second;
    if (out.sequence[out.sequence.size() - 2].second != last)
        throw std::runtime_error("padded Kronecker sequence not constant at n >= 2r");
    out.value = last;
    out.stabilization_n = out.sequence.back().first;
    for (auto it = out.sequence.rbegin(); it != out.sequence.rend() && it->second == last; ++it)
        out.stabilization_n = it->first;
    return out;
}

long stable_kronecker_via_hom(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int r = lambda.degree() + mu.degree();
    int s = mu.degree();
    if (nu.degree() > r) throw std::invalid_argument("nu must have degree at most r");
    TowerConfig cfg(Family::partition, std::max(2L * r, 2L), 2 * r);
    if (path_count(Family::partition, lambda, 2 * (r - s), nu, 2 * r) == 0) return 0;
    SkewModule sm = skew_module(cfg, lambda, nu, r, s);
    CellModule delta_mu = cell_module(cfg, 2 * s, mu);
    auto homs = hom_space(delta_mu.gen_action, sm.gen_action, delta_mu.dim(), sm.dim());
    return static_cast<long>(homs.size());
}

}  // namespace skewcell
