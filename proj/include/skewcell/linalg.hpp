#pragma once

#include <optional>
#include <vector>

#include "skewcell/rational.hpp"

namespace skewcell {

// Dense matrix over exact rationals.  Vectors are rows throughout the
// project: a right module action is v -> v * A, so representations are
// honest homomorphisms rho(a*b) = rho(a) * rho(b).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    std::vector<Rational> row(int i) const {
        return std::vector<Rational>(a.begin() + static_cast<size_t>(i) * cols,
                                     a.begin() + static_cast<size_t>(i + 1) * cols);
    }

    Matrix transposed() const;

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Rational& c, const Matrix& x);

std::vector<Rational> row_times(const std::vector<Rational>& v, const Matrix& m);

// In-place reduced row echelon form.  Returns the pivot columns.  RREF is
// canonical: two matrices have equal row space iff their RREFs coincide.
std::vector<int> rref(Matrix& m);

int rank_of(Matrix m);

// Rows spanning { x : x * m = 0 }.
Matrix left_kernel(const Matrix& m);

// Rows spanning { x : m * x^T = 0 }.
Matrix right_kernel(const Matrix& m);

// Exact-rational row space in canonical (RREF) form.  Used for isotypic
// components, path subspaces and skew-module carriers.
struct Subspace {
    int ambient = 0;
    Matrix basis;  // RREF, no zero rows

    static Subspace zero(int ambient_dim) {
        Subspace s;
        s.ambient = ambient_dim;
        s.basis = Matrix(0, ambient_dim);
        return s;
    }
    static Subspace full(int ambient_dim) {
        Subspace s;
        s.ambient = ambient_dim;
        s.basis = Matrix::identity(ambient_dim);
        return s;
    }
    // Canonicalizes an arbitrary spanning set of rows.
    static Subspace from_rows(Matrix m);

    int dim() const { return basis.rows; }
    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the basis rows; nullopt if v is outside.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient == y.ambient && x.basis == y.basis;
    }
    friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
};

Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersect(const Subspace& x, const Subspace& y);

}  // namespace skewcell
