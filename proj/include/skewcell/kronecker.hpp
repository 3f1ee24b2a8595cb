#pragma once

#include <utility>
#include <vector>

#include "skewcell/branching.hpp"
#include "skewcell/rational.hpp"

namespace skewcell {

// The first-row padding lambda_[n] = (n - |lambda|, lambda_1, ...).
struct PaddedPartition {
    Partition base;
    long n = 0;

    PaddedPartition(Partition b, long n_value);
    Partition padded() const;
};

inline long min_padding(const Partition& p) { return p.degree() + p.first(); }

std::vector<Partition> partitions_of(int n);

// Symmetric group character chi^lambda at the cycle type rho
// (Murnaghan-Nakayama recursion over border strips).
long character(const Partition& lambda, const Partition& rho);

// Centralizer order of the cycle type: prod i^{m_i} m_i!.
Integer centralizer_order(const Partition& rho);

// Multiplicity of the third Specht module in the tensor product of the
// first two, all of degree n; exact and asserted a non-negative integer.
long kronecker_coefficient(const Partition& a, const Partition& b, const Partition& c);

struct StableKronecker {
    long value = 0;
    long stabilization_n = 0;                    // first n from which the computed tail is constant
    std::vector<std::pair<long, long>> sequence;  // (n, g) pairs, weakly increasing
};

// Padded Kronecker coefficients at growing n; the sequence is asserted
// weakly increasing and constant on the two tested values with n >= 2r.
StableKronecker stable_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

// The same number through the partition tower at n = 2r: the Hom dimension
// from the cell module at mu into the skew module at nu over lambda.
long stable_kronecker_via_hom(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace skewcell
