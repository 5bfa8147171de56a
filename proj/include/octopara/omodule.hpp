#pragma once

#include <optional>
#include <span>
#include <vector>

#include "octopara/linalg.hpp"
#include "octopara/octonion.hpp"
#include "octopara/rng.hpp"

namespace octopara {

enum class Side { left, right };

// Element of the Hilbert O-bimodule H = Re H ⊗ O with n octonion components
// over a fixed orthonormal real basis {u_k}. The canonical decomposition is
// x = sum_i e_i x_i with x_i in Re H (basis units on the left); the real
// coordinate flattening is index 8k + i for component k, coefficient i.
class OVector {
public:
    OVector() = default;
    explicit OVector(int dim) : comp_(dim) {}
    explicit OVector(std::vector<Octonion> comps) : comp_(std::move(comps)) {}

    // e_i u_k
    static OVector basis(int dim, int k, int i = 0) {
        OVector x(dim);
        x.comp_[k] = Octonion::unit(i);
        return x;
    }

    int dim() const { return int(comp_.size()); }
    const Octonion& operator[](int k) const { return comp_[k]; }
    Octonion& operator[](int k) { return comp_[k]; }

    std::vector<double> flat() const {
        std::vector<double> v(8 * comp_.size());
        for (size_t k = 0; k < comp_.size(); ++k)
            for (int i = 0; i < 8; ++i) v[8 * k + i] = comp_[k][i];
        return v;
    }
    static OVector from_flat(std::span<const double> v) {
        OVector x(int(v.size() / 8));
        for (int k = 0; k < x.dim(); ++k)
            for (int i = 0; i < 8; ++i) x.comp_[k][i] = v[8 * k + i];
        return x;
    }

    OVector& operator+=(const OVector& o);
    OVector& operator-=(const OVector& o);
    OVector& operator*=(double s);

    friend OVector operator+(OVector a, const OVector& b) { return a += b; }
    friend OVector operator-(OVector a, const OVector& b) { return a -= b; }
    friend OVector operator*(OVector a, double s) { return a *= s; }
    friend OVector operator*(double s, OVector a) { return a *= s; }
    OVector operator-() const;

    double norm_sq() const;
    double norm() const;
    bool is_zero() const;

private:
    std::vector<Octonion> comp_;
};

void require_same_dim(const OVector& x, const OVector& y);

// <x,y> = sum_k conj(x_k) y_k; O-Hermitian, <x,x> real nonnegative.
Octonion inner_product(const OVector& x, const OVector& y);

// Re <x,y>, which is the Euclidean inner product of the flattenings.
double inner_product_re(const OVector& x, const OVector& y);

// B_p(u,v) = <u,v> p - <u,vp>; antisymmetric and purely imaginary.
Octonion second_associator(const OVector& u, const OVector& v, const Octonion& p);

// Componentwise projection onto the e_0 coefficients.
OVector re_project(const OVector& x);

// Componentwise left/right scalar multiplication.
OVector scale(const OVector& x, const Octonion& p, Side side);

// [x,p,q] = (xp)q - x(pq) with right scalar action.
OVector right_associator(const OVector& x, const Octonion& p, const Octonion& q);

double max_abs(const OVector& x);

// Rank test on the 7 x n matrix of imaginary coefficients: x is a slice
// paravector iff the second singular value is at most tol times the first.
// Returns the dominant imaginary axis (e_1 by convention when x is real),
// or nullopt when the imaginary rank exceeds one. Throws on x = 0.
std::optional<ImaginaryUnit> slice_membership(const OVector& x, double tol = 1e-9);

// z = u + J v with u, v in Re H: all components share the single imaginary
// axis J.
class SliceParavector {
public:
    SliceParavector(OVector u, OVector v, ImaginaryUnit axis);

    // Decomposes x, throwing NotSliceError when x is not a slice paravector.
    static SliceParavector from_vector(const OVector& x, double tol = 1e-9);

    const OVector& real_part() const { return u_; }
    const OVector& axis_part() const { return v_; }
    const ImaginaryUnit& axis() const { return axis_; }
    int dim() const { return u_.dim(); }

    OVector value() const;
    double norm() const;

private:
    OVector u_, v_;
    ImaginaryUnit axis_;
};

// Coefficients <z_a, x> of the Parseval expansion x = sum_a z_a <z_a, x>.
// The family must be weak associative orthonormal (checked, throws
// BasisNotOrthonormalError otherwise).
std::vector<Octonion> parseval_expand(const OVector& x,
                                      std::span<const SliceParavector> basis,
                                      double tol = 1e-10);

// 8x8 real matrices of the scalar actions x -> px and x -> xp on O.
Matrix left_mult_matrix(const Octonion& p);
Matrix right_mult_matrix(const Octonion& p);
// Block-diagonal componentwise action on H (8n x 8n).
Matrix block_left_mult(const Octonion& p, int dim);
Matrix block_right_mult(const Octonion& p, int dim);

// Random helpers shared by tests, the verify suites and sampling code paths.
Octonion random_octonion(Rng& rng);
ImaginaryUnit random_imaginary_unit(Rng& rng);
OVector random_ovector(int dim, Rng& rng);
OVector random_real_ovector(int dim, Rng& rng);
SliceParavector random_slice_paravector(int dim, Rng& rng);

}  // namespace octopara
