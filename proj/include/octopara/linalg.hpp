#pragma once

#include <cstddef>
#include <vector>

#include "octopara/errors.hpp"

namespace octopara {

// Dense row-major matrix. Everything in this project lives at desk scale
// (8n <= ~64), so a simple contiguous buffer beats any external dependency.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0.0) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    Matrix& operator*=(double s);

    std::vector<double> col(int j) const {
        std::vector<double> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(int j, const std::vector<double>& v) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);

double max_abs(const Matrix& a);
double frobenius(const Matrix& a);

// Stacks b's columns to the right of a's.
Matrix hcat(const Matrix& a, const Matrix& b);

struct SymEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // columns, same order
};

// Cyclic Jacobi for symmetric matrices. Sweeps until every off-diagonal
// entry is below threshold_scale * frobenius(A), at most max_sweeps sweeps.
SymEigen jacobi_eigensolve(Matrix a, double threshold_scale = 1e-13, int max_sweeps = 100);

// Largest singular value.
double spectral_norm(const Matrix& a);

// Orthonormal basis of the column span (modified Gram-Schmidt, two passes,
// columns with residual below tol * initial scale are dropped).
Matrix orthonormal_columns(const Matrix& a, double tol);

// Orthonormal basis of the part of span(w) orthogonal to span(s).
// Both inputs must have orthonormal columns.
Matrix complement_within(const Matrix& w, const Matrix& s, double tol);

// Orthonormal basis of span(u) ∩ span(v), both inputs orthonormal. A vector
// counts as common when its eigenvalue under (P_u + P_v) exceeds 2 - tol.
Matrix subspace_intersection(const Matrix& u, const Matrix& v, double tol);

}  // namespace octopara
