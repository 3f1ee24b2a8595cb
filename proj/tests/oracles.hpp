#pragma once

// Independent oracles used to freeze expected values in the tests.  These
// deliberately avoid the library's own counting paths: Bell numbers come
// from the Bell triangle, standard-tableau counts from the hook-length
// product, and characters from representing matrices.

#include <vector>

#include "skewcell/branching.hpp"

namespace oracles {

inline long bell(int n) {
    std::vector<std::vector<long>> tri{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> row{tri.back().back()};
        for (long x : tri.back()) row.push_back(row.back() + x);
        tri.push_back(std::move(row));
    }
    return tri[n][0];
}

inline long double_factorial(int n) {
    long r = 1;
    for (int i = n; i > 1; i -= 2) r *= i;
    return r;
}

inline long factorial(int n) {
    long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Number of standard Young tableaux by the hook-length product.
inline long hook_count(const skewcell::Partition& shape) {
    int n = shape.degree();
    if (n == 0) return 1;
    std::vector<int> conj;
    for (int c = 0; c < shape.parts[0]; ++c) {
        int h = 0;
        for (int p : shape.parts)
            if (p > c) ++h;
        conj.push_back(h);
    }
    long num = factorial(n);
    long den = 1;
    for (size_t r = 0; r < shape.parts.size(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c)
            den *= (shape.parts[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
    return num / den;
}

// A concrete permutation with the given cycle type, as 1-based images.
inline std::vector<int> permutation_of_cycle_type(const skewcell::Partition& rho) {
    std::vector<int> images(rho.degree());
    int base = 0;
    for (int part : rho.parts) {
        for (int i = 0; i < part; ++i) images[base + i] = base + 1 + ((i + 1) % part);
        base += part;
    }
    return images;
}

}  // namespace oracles
