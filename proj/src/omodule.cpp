#include "octopara/omodule.hpp"

#include <algorithm>
#include <cmath>

namespace octopara {

OVector& OVector::operator+=(const OVector& o) {
    require_same_dim(*this, o);
    for (int k = 0; k < dim(); ++k) comp_[k] += o.comp_[k];
    return *this;
}

OVector& OVector::operator-=(const OVector& o) {
    require_same_dim(*this, o);
    for (int k = 0; k < dim(); ++k) comp_[k] -= o.comp_[k];
    return *this;
}

OVector& OVector::operator*=(double s) {
    for (auto& c : comp_) c *= s;
    return *this;
}

OVector OVector::operator-() const {
    OVector r(dim());
    for (int k = 0; k < dim(); ++k) r[k] = -comp_[k];
    return r;
}

double OVector::norm_sq() const {
    double s = 0;
    for (const auto& c : comp_) s += c.norm_sq();
    return s;
}

double OVector::norm() const { return std::sqrt(norm_sq()); }

bool OVector::is_zero() const {
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

void require_same_dim(const OVector& x, const OVector& y) {
    if (x.dim() != y.dim())
        throw DimensionMismatchError("vector dimensions differ: " + std::to_string(x.dim()) +
                                     " vs " + std::to_string(y.dim()));
}

Octonion inner_product(const OVector& x, const OVector& y) {
    require_same_dim(x, y);
    Octonion s;
    for (int k = 0; k < x.dim(); ++k) s += x[k].conj() * y[k];
    return s;
}

double inner_product_re(const OVector& x, const OVector& y) {
    require_same_dim(x, y);
    double s = 0;
    for (int k = 0; k < x.dim(); ++k)
        for (int i = 0; i < 8; ++i) s += x[k][i] * y[k][i];
    return s;
}

Octonion second_associator(const OVector& u, const OVector& v, const Octonion& p) {
    return inner_product(u, v) * p - inner_product(u, scale(v, p, Side::right));
}

OVector re_project(const OVector& x) {
    OVector r(x.dim());
    for (int k = 0; k < x.dim(); ++k) r[k] = Octonion::real(x[k].re());
    return r;
}

OVector scale(const OVector& x, const Octonion& p, Side side) {
    OVector r(x.dim());
    for (int k = 0; k < x.dim(); ++k) r[k] = (side == Side::left) ? p * x[k] : x[k] * p;
    return r;
}

OVector right_associator(const OVector& x, const Octonion& p, const Octonion& q) {
    return scale(scale(x, p, Side::right), q, Side::right) -
           scale(x, p * q, Side::right);
}

double max_abs(const OVector& x) {
    double m = 0;
    for (int k = 0; k < x.dim(); ++k) m = std::max(m, abs_max(x[k]));
    return m;
}

std::optional<ImaginaryUnit> slice_membership(const OVector& x, double tol) {
    const double nrm = x.norm();
    if (nrm == 0.0) throw ZeroVectorError("slice membership of the zero vector");

    // Gram matrix of the 7 x n imaginary coefficient matrix.
    Matrix g(7, 7);
    for (int i = 1; i < 8; ++i)
        for (int j = 1; j < 8; ++j) {
            double s = 0;
            for (int k = 0; k < x.dim(); ++k) s += x[k][i] * x[k][j];
            g(i - 1, j - 1) = s;
        }
    const SymEigen e = jacobi_eigensolve(g);
    const double s1 = std::sqrt(std::max(0.0, e.values[6]));
    const double s2 = std::sqrt(std::max(0.0, e.values[5]));

    if (s1 <= tol * nrm) return ImaginaryUnit(Octonion::unit(1));  // x in Re H
    if (s2 > tol * s1) return std::nullopt;

    Octonion j;
    int arg = 0;
    double best = 0;
    for (int i = 1; i < 8; ++i) {
        j[i] = e.vectors(i - 1, 6);
        if (std::abs(j[i]) > best) {
            best = std::abs(j[i]);
            arg = i;
        }
    }
    if (j[arg] < 0) j = -j;  // deterministic sign
    return ImaginaryUnit(j);
}

SliceParavector::SliceParavector(OVector u, OVector v, ImaginaryUnit axis)
    : u_(std::move(u)), v_(std::move(v)), axis_(axis) {
    require_same_dim(u_, v_);
    for (int k = 0; k < u_.dim(); ++k) {
        if (abs_max(u_[k].im()) != 0.0 || abs_max(v_[k].im()) != 0.0)
            throw NotRealPartError("slice paravector parts must lie in Re H");
    }
}

SliceParavector SliceParavector::from_vector(const OVector& x, double tol) {
    const auto j = slice_membership(x, tol);
    if (!j) throw NotSliceError("vector is not a slice paravector");
    OVector u(x.dim()), v(x.dim());
    for (int k = 0; k < x.dim(); ++k) {
        u[k] = Octonion::real(x[k].re());
        double along = 0;
        for (int i = 1; i < 8; ++i) along += x[k][i] * j->value()[i];
        v[k] = Octonion::real(along);
    }
    return SliceParavector(std::move(u), std::move(v), *j);
}

OVector SliceParavector::value() const {
    OVector r(u_.dim());
    for (int k = 0; k < u_.dim(); ++k) r[k] = u_[k] + axis_.value() * v_[k].re();
    return r;
}

double SliceParavector::norm() const { return value().norm(); }

std::vector<Octonion> parseval_expand(const OVector& x,
                                      std::span<const SliceParavector> basis,
                                      double tol) {
    std::vector<OVector> zs;
    zs.reserve(basis.size());
    for (const auto& z : basis) {
        require_same_dim(x, z.real_part());
        zs.push_back(z.value());
    }
    for (size_t a = 0; a < zs.size(); ++a) {
        for (size_t b = a; b < zs.size(); ++b) {
            Octonion ip = inner_product(zs[a], zs[b]);
            if (a == b) ip[0] -= 1.0;
            if (abs_max(ip) > tol)
                throw BasisNotOrthonormalError("family is not orthonormal");
            for (int p = 1; p < 8; ++p) {
                const Octonion bp = second_associator(zs[a], zs[b], Octonion::unit(p));
                if (abs_max(bp) > tol)
                    throw BasisNotOrthonormalError("family is not weak associative");
            }
        }
    }
    std::vector<Octonion> coeffs;
    coeffs.reserve(zs.size());
    for (const auto& z : zs) coeffs.push_back(inner_product(z, x));
    return coeffs;
}

Matrix left_mult_matrix(const Octonion& p) {
    Matrix m(8, 8);
    for (int j = 0; j < 8; ++j) {
        const Octonion col = p * Octonion::unit(j);
        for (int i = 0; i < 8; ++i) m(i, j) = col[i];
    }
    return m;
}

Matrix right_mult_matrix(const Octonion& p) {
    Matrix m(8, 8);
    for (int j = 0; j < 8; ++j) {
        const Octonion col = Octonion::unit(j) * p;
        for (int i = 0; i < 8; ++i) m(i, j) = col[i];
    }
    return m;
}

static Matrix block_diag(const Matrix& b, int dim) {
    Matrix m(8 * dim, 8 * dim);
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m(8 * k + i, 8 * k + j) = b(i, j);
    return m;
}

Matrix block_left_mult(const Octonion& p, int dim) { return block_diag(left_mult_matrix(p), dim); }
Matrix block_right_mult(const Octonion& p, int dim) { return block_diag(right_mult_matrix(p), dim); }

Octonion random_octonion(Rng& rng) {
    Octonion x;
    for (int i = 0; i < 8; ++i) x[i] = rng.normal();
    return x;
}

ImaginaryUnit random_imaginary_unit(Rng& rng) {
    // Normal components give the uniform distribution on the 6-sphere.
    while (true) {
        Octonion j;
        for (int i = 1; i < 8; ++i) j[i] = rng.normal();
        if (j.norm() > 1e-6) return ImaginaryUnit(j / j.norm());
    }
}

OVector random_ovector(int dim, Rng& rng) {
    OVector x(dim);
    for (int k = 0; k < dim; ++k) x[k] = random_octonion(rng);
    return x;
}

OVector random_real_ovector(int dim, Rng& rng) {
    OVector x(dim);
    for (int k = 0; k < dim; ++k) x[k] = Octonion::real(rng.normal());
    return x;
}

SliceParavector random_slice_paravector(int dim, Rng& rng) {
    return SliceParavector(random_real_ovector(dim, rng), random_real_ovector(dim, rng),
                           random_imaginary_unit(rng));
}

}  // namespace octopara
