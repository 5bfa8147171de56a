#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <iosfwd>

#include "octopara/errors.hpp"

namespace octopara {

namespace detail {

// Structure constants of the octonion basis product e_i e_j = sgn * e_idx.
// Index 0 is the real unit.
struct BasisTable {
    int idx[8][8];
    int sgn[8][8];
};

// The seven oriented triples of the Fano plane. Each (a,b,c) encodes the
// cyclic products e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b.
inline constexpr int kFanoTriples[7][3] = {
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};

consteval BasisTable make_basis_table() {
    BasisTable t{};
    for (int i = 0; i < 8; ++i) {
        t.idx[0][i] = i;
        t.sgn[0][i] = 1;
        t.idx[i][0] = i;
        t.sgn[i][0] = 1;
    }
    for (int i = 1; i < 8; ++i) {
        t.idx[i][i] = 0;
        t.sgn[i][i] = -1;
    }
    for (const auto& tr : kFanoTriples) {
        const int a = tr[0], b = tr[1], c = tr[2];
        t.idx[a][b] = c; t.sgn[a][b] = 1;
        t.idx[b][a] = c; t.sgn[b][a] = -1;
        t.idx[b][c] = a; t.sgn[b][c] = 1;
        t.idx[c][b] = a; t.sgn[c][b] = -1;
        t.idx[c][a] = b; t.sgn[c][a] = 1;
        t.idx[a][c] = b; t.sgn[a][c] = -1;
    }
    return t;
}

inline constexpr BasisTable kBasisTable = make_basis_table();

// Compile-time sanity gate: the generated table must define every product and
// satisfy alternativity [e_i, e_i, e_j] = [e_i, e_j, e_j] = 0 on the basis.
consteval bool basis_table_is_alternative() {
    const BasisTable& t = kBasisTable;
    for (int i = 1; i < 8; ++i)
        for (int j = 1; j < 8; ++j)
            if (i != j && t.sgn[i][j] == 0) return false;
    // Signed basis element: value = s * e_k.
    struct Elem { int s; int k; };
    auto mul = [&](Elem x, Elem y) -> Elem {
        return {x.s * y.s * t.sgn[x.k][y.k], t.idx[x.k][y.k]};
    };
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Elem ei{1, i}, ej{1, j};
            const Elem l1 = mul(mul(ei, ei), ej), r1 = mul(ei, mul(ei, ej));
            if (l1.k != r1.k || l1.s != r1.s) return false;
            const Elem l2 = mul(mul(ei, ej), ej), r2 = mul(ei, mul(ej, ej));
            if (l2.k != r2.k || l2.s != r2.s) return false;
        }
    }
    return true;
}

static_assert(basis_table_is_alternative(),
              "Fano table generation produced a non-alternative product");

}  // namespace detail

// An octonion x = x_0 + sum_{i=1..7} x_i e_i stored as 8 doubles.
// Immutable value semantics; all operations are pure.
class Octonion {
public:
    constexpr Octonion() : c_{} {}
    constexpr Octonion(double x0, double x1, double x2, double x3,
                       double x4, double x5, double x6, double x7)
        : c_{x0, x1, x2, x3, x4, x5, x6, x7} {}
    constexpr explicit Octonion(const std::array<double, 8>& c) : c_(c) {}

    static constexpr Octonion real(double r) { return Octonion(r, 0, 0, 0, 0, 0, 0, 0); }
    static constexpr Octonion unit(int i) {
        Octonion x;
        x.c_[i] = 1.0;
        return x;
    }

    constexpr double operator[](int i) const { return c_[i]; }
    constexpr double& operator[](int i) { return c_[i]; }
    constexpr const std::array<double, 8>& coeffs() const { return c_; }

    constexpr Octonion operator-() const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = -c_[i];
        return r;
    }
    constexpr Octonion& operator+=(const Octonion& o) {
        for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
        return *this;
    }
    constexpr Octonion& operator-=(const Octonion& o) {
        for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    constexpr Octonion& operator*=(double s) {
        for (int i = 0; i < 8; ++i) c_[i] *= s;
        return *this;
    }
    constexpr Octonion& operator/=(double s) {
        for (int i = 0; i < 8; ++i) c_[i] /= s;
        return *this;
    }

    friend constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
    friend constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
    friend constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
    friend constexpr Octonion operator/(Octonion a, double s) { return a /= s; }

    // Bilinear product from the Fano table.
    friend constexpr Octonion operator*(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) {
            const double ai = a.c_[i];
            if (ai == 0.0) continue;
            for (int j = 0; j < 8; ++j) {
                r.c_[detail::kBasisTable.idx[i][j]] +=
                    detail::kBasisTable.sgn[i][j] * ai * b.c_[j];
            }
        }
        return r;
    }

    constexpr Octonion conj() const {
        return Octonion(c_[0], -c_[1], -c_[2], -c_[3], -c_[4], -c_[5], -c_[6], -c_[7]);
    }
    constexpr double re() const { return c_[0]; }
    constexpr Octonion im() const {
        return Octonion(0, c_[1], c_[2], c_[3], c_[4], c_[5], c_[6], c_[7]);
    }
    constexpr double norm_sq() const {
        double s = 0;
        for (double v : c_) s += v * v;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    Octonion inverse() const {
        const double n2 = norm_sq();
        if (n2 == 0.0) throw ZeroDivisionError("inverse of the zero octonion");
        return conj() / n2;
    }

    constexpr bool is_zero() const {
        for (double v : c_)
            if (v != 0.0) return false;
        return true;
    }

    constexpr friend bool operator==(const Octonion& a, const Octonion& b) {
        for (int i = 0; i < 8; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

private:
    std::array<double, 8> c_;
};

inline constexpr Octonion conj(const Octonion& x) { return x.conj(); }

inline double abs_max(const Octonion& x) {
    double m = 0;
    for (double v : x.coeffs()) m = std::max(m, std::abs(v));
    return m;
}

// [x,y,z] = (xy)z - x(yz); fully antisymmetric on the octonions.
inline constexpr Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
    return (x * y) * z - x * (y * z);
}

// [x,y] = xy - yx.
inline constexpr Octonion commutator(const Octonion& x, const Octonion& y) {
    return x * y - y * x;
}

// Im p recovered through the basis-associator identity
//   Im p = -(1/48) sum_{i,j=1..7} [e_i, e_j, (e_i e_j) p].
// A deliberately indirect route used to cross-check the coefficient layout.
inline Octonion im_via_associator(const Octonion& p) {
    Octonion acc;
    for (int i = 1; i < 8; ++i) {
        const Octonion ei = Octonion::unit(i);
        for (int j = 1; j < 8; ++j) {
            const Octonion ej = Octonion::unit(j);
            acc += associator(ei, ej, (ei * ej) * p);
        }
    }
    return acc * (-1.0 / 48.0);
}

// A unit imaginary octonion J (so J^2 = -1). The constructor drops any stray
// real part below tol and renormalizes, so downstream code can rely on the
// invariants holding exactly up to rounding.
class ImaginaryUnit {
public:
    explicit ImaginaryUnit(const Octonion& j, double tol = 1e-9) {
        const double n = j.norm();
        if (n == 0.0) throw NotUnitError("imaginary unit must be nonzero");
        if (std::abs(j.re()) > tol * n)
            throw NotUnitError("imaginary unit has a nonvanishing real part");
        Octonion v = j.im();
        const double vn = v.norm();
        if (vn == 0.0) throw NotUnitError("imaginary unit must have a nonzero imaginary part");
        value_ = v / vn;
    }

    const Octonion& value() const { return value_; }

private:
    Octonion value_;
};

std::ostream& operator<<(std::ostream& os, const Octonion& x);

}  // namespace octopara
