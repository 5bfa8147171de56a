#include "octopara/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace octopara {

Matrix& Matrix::operator+=(const Matrix& b) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatchError("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    if (int(x.size()) != a.cols()) throw ShapeMismatchError("matvec shape mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double max_abs(const Matrix& a) {
    double m = 0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

double frobenius(const Matrix& a) {
    double s = 0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.rows() != b.rows()) throw ShapeMismatchError("hcat row mismatch");
    Matrix c(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

SymEigen jacobi_eigensolve(Matrix a, double threshold_scale, int max_sweeps) {
    const int n = a.rows();
    if (n != a.cols()) throw ShapeMismatchError("jacobi_eigensolve needs a square matrix");
    Matrix v = Matrix::identity(n);
    const double stop = threshold_scale * std::max(frobenius(a), 1e-300);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = arp - s * (arq + tau * arp);
                        a(p, r) = a(r, p);
                        a(r, q) = arq + s * (arp - tau * arq);
                        a(q, r) = a(r, q);
                    }
                    const double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    SymEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

double spectral_norm(const Matrix& a) {
    if (a.empty()) return 0.0;
    const Matrix g = a.transpose() * a;
    const SymEigen e = jacobi_eigensolve(g);
    const double top = e.values.empty() ? 0.0 : e.values.back();
    return std::sqrt(std::max(0.0, top));
}

Matrix orthonormal_columns(const Matrix& a, double tol) {
    if (a.empty()) return Matrix(a.rows(), 0);
    const int m = a.rows();
    double scale = 0;
    for (int j = 0; j < a.cols(); ++j) {
        double n2 = 0;
        for (int i = 0; i < m; ++i) n2 += a(i, j) * a(i, j);
        scale = std::max(scale, std::sqrt(n2));
    }
    if (scale == 0.0) return Matrix(m, 0);

    std::vector<std::vector<double>> basis;
    for (int j = 0; j < a.cols(); ++j) {
        std::vector<double> w = a.col(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                double d = 0;
                for (int i = 0; i < m; ++i) d += b[i] * w[i];
                for (int i = 0; i < m; ++i) w[i] -= d * b[i];
            }
        }
        double n2 = 0;
        for (double v : w) n2 += v * v;
        const double nrm = std::sqrt(n2);
        if (nrm > tol * scale) {
            for (double& v : w) v /= nrm;
            basis.push_back(std::move(w));
        }
    }
    Matrix q(m, int(basis.size()));
    for (int j = 0; j < q.cols(); ++j) q.set_col(j, basis[j]);
    return q;
}

Matrix complement_within(const Matrix& w, const Matrix& s, double tol) {
    if (w.empty()) return Matrix(w.rows(), 0);
    if (s.empty()) return w;
    Matrix residual = w - s * (s.transpose() * w);
    return orthonormal_columns(residual, tol);
}

Matrix subspace_intersection(const Matrix& u, const Matrix& v, double tol) {
    if (u.empty() || v.empty()) return Matrix(std::max(u.rows(), v.rows()), 0);
    if (u.rows() != v.rows()) throw ShapeMismatchError("subspace dimension mismatch");
    const int m = u.rows();
    Matrix p = u * u.transpose() + v * v.transpose();
    const SymEigen e = jacobi_eigensolve(p);
    Matrix out(m, 0);
    std::vector<std::vector<double>> cols;
    for (int j = e.vectors.cols() - 1; j >= 0; --j) {
        if (e.values[j] >= 2.0 - tol) cols.push_back(e.vectors.col(j));
    }
    Matrix q(m, int(cols.size()));
    for (int j = 0; j < q.cols(); ++j) q.set_col(j, cols[j]);
    return q;
}

}  // namespace octopara
