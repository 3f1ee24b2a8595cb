#include "skewcell/linalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace skewcell {

Matrix Matrix::transposed() const {
    Matrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& c = x.at(i, k);
            if (c == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rational& v = y.at(k, j);
                if (v != 0) z.at(i, j) += c * v;
            }
        }
    return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

Matrix operator*(const Rational& c, const Matrix& x) {
    Matrix z = x;
    for (auto& v : z.a) v *= c;
    return z;
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& m) {
    if (static_cast<int>(v.size()) != m.rows) throw std::invalid_argument("row length mismatch");
    std::vector<Rational> out(m.cols, Rational(0));
    for (int k = 0; k < m.rows; ++k) {
        if (v[k] == 0) continue;
        for (int j = 0; j < m.cols; ++j) {
            const Rational& x = m.at(k, j);
            if (x != 0) out[j] += v[k] * x;
        }
    }
    return out;
}

namespace {

// Size heuristic for pivot selection: small numerators keep the
// intermediate entries from blowing up.
size_t entry_weight(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

}  // namespace

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int best = -1;
        size_t best_w = 0;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            size_t w = entry_weight(m.at(i, c));
            if (best < 0 || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(best, j));
        Rational inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j)
            if (m.at(r, j) != 0) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                if (m.at(r, j) != 0) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_of(Matrix m) { return static_cast<int>(rref(m).size()); }

Matrix right_kernel(const Matrix& m) {
    Matrix e = m;
    std::vector<int> pivots = rref(e);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    int nullity = m.cols - static_cast<int>(pivots.size());
    Matrix k(nullity, m.cols);
    int row = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        k.at(row, c) = 1;
        for (size_t p = 0; p < pivots.size(); ++p) k.at(row, pivots[p]) = -e.at(static_cast<int>(p), c);
        ++row;
    }
    return k;
}

Matrix left_kernel(const Matrix& m) { return right_kernel(m.transposed()); }

Subspace Subspace::from_rows(Matrix m) {
    Subspace s;
    s.ambient = m.cols;
    std::vector<int> pivots = rref(m);
    Matrix b(static_cast<int>(pivots.size()), m.cols);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < m.cols; ++j) b.at(i, j) = m.at(i, j);
    s.basis = std::move(b);
    return s;
}

std::optional<std::vector<Rational>> Subspace::coordinates(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("vector/ambient mismatch");
    // The basis is in RREF, so coordinates can be read off at the pivots.
    std::vector<Rational> rem = v;
    std::vector<Rational> coords(basis.rows, Rational(0));
    for (int i = 0; i < basis.rows; ++i) {
        int p = 0;
        while (p < ambient && basis.at(i, p) == 0) ++p;
        if (p == ambient) continue;
        Rational c = rem[p];
        if (c == 0) continue;
        coords[i] = c;
        for (int j = p; j < ambient; ++j)
            if (basis.at(i, j) != 0) rem[j] -= c * basis.at(i, j);
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return coords;
}

bool Subspace::contains(const std::vector<Rational>& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (ambient != other.ambient) throw std::invalid_argument("ambient mismatch");
    for (int i = 0; i < other.basis.rows; ++i)
        if (!contains(other.basis.row(i))) return false;
    return true;
}

Subspace sum(const Subspace& x, const Subspace& y) {
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    Matrix stacked(x.basis.rows + y.basis.rows, x.ambient);
    for (int i = 0; i < x.basis.rows; ++i)
        for (int j = 0; j < x.ambient; ++j) stacked.at(i, j) = x.basis.at(i, j);
    for (int i = 0; i < y.basis.rows; ++i)
        for (int j = 0; j < x.ambient; ++j) stacked.at(x.basis.rows + i, j) = y.basis.at(i, j);
    return Subspace::from_rows(std::move(stacked));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
    if (x.ambient != y.ambient) throw std::invalid_argument("ambient mismatch");
    if (x.dim() == 0 || y.dim() == 0) return Subspace::zero(x.ambient);
    // Rows (a | b) with a*X = b*Y span the intersection through a*X.
    Matrix stacked(x.basis.rows + y.basis.rows, x.ambient);
    for (int i = 0; i < x.basis.rows; ++i)
        for (int j = 0; j < x.ambient; ++j) stacked.at(i, j) = x.basis.at(i, j);
    for (int i = 0; i < y.basis.rows; ++i)
        for (int j = 0; j < x.ambient; ++j) stacked.at(x.basis.rows + i, j) = -y.basis.at(i, j);
    Matrix ker = left_kernel(stacked);
    Matrix rows(ker.rows, x.ambient);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < x.ambient; ++j) {
            Rational acc = 0;
            for (int k = 0; k < x.basis.rows; ++k)
                if (ker.at(i, k) != 0) acc += ker.at(i, k) * x.basis.at(k, j);
            rows.at(i, j) = acc;
        }
    return Subspace::from_rows(std::move(rows));
}

}  // namespace skewcell
