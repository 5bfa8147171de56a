#pragma once

#include "octopara/linalg.hpp"
#include "octopara/omodule.hpp"

namespace octopara {

// A right para-linear operator on H. Canonical storage is the core map
// f_R : H -> Re H (an n x 8n real matrix); the full 8n x 8n matrix is a
// derived cache built through f(x) = sum_i e_i f_R(x conj(e_i)), so
// para-linearity is a structural invariant rather than a runtime check.
class ParaLinearOperator {
public:
    static ParaLinearOperator from_core(Matrix core);

    // Accepts a full real matrix after probing Re B_p over every basis vector
    // and p in {e_1..e_7}; throws NotParaLinearError with the offending probe.
    static ParaLinearOperator from_real_matrix(const Matrix& m, double tol = 1e-10);

    static ParaLinearOperator identity(int dim);
    static ParaLinearOperator zero(int dim);
    // L_p : x -> px, componentwise.
    static ParaLinearOperator left_mult(const Octonion& p, int dim);

    int dim() const { return dim_; }
    const Matrix& core() const { return core_; }
    const Matrix& matrix() const { return matrix_; }

    OVector apply(const OVector& x) const;

    ParaLinearOperator& operator+=(const ParaLinearOperator& o);
    ParaLinearOperator& operator-=(const ParaLinearOperator& o);
    ParaLinearOperator& operator*=(double s);
    friend ParaLinearOperator operator+(ParaLinearOperator a, const ParaLinearOperator& b) {
        return a += b;
    }
    friend ParaLinearOperator operator-(ParaLinearOperator a, const ParaLinearOperator& b) {
        return a -= b;
    }
    friend ParaLinearOperator operator*(ParaLinearOperator a, double s) { return a *= s; }
    friend ParaLinearOperator operator*(double s, ParaLinearOperator a) { return a *= s; }

private:
    ParaLinearOperator(int dim, Matrix core, Matrix matrix)
        : dim_(dim), core_(std::move(core)), matrix_(std::move(matrix)) {}

    int dim_ = 0;
    Matrix core_;    // n x 8n
    Matrix matrix_;  // 8n x 8n cache
};

void require_same_dim(const ParaLinearOperator& a, const ParaLinearOperator& b);

// B_p(T,x) = T(x)p - T(xp); purely imaginary componentwise real part, and
// equal to sum_i f_R([x,p,e_i]) e_i.
OVector operator_second_associator(const ParaLinearOperator& t, const OVector& x,
                                   const Octonion& p);

// (f ⊛ g)(x) = sum_i e_i Re(f(g(x conj(e_i)))); the unique para-linear map
// whose real part matches the plain composition.
ParaLinearOperator regular_compose(const ParaLinearOperator& f, const ParaLinearOperator& g);

// [f,g,x] = (f ⊛ g)(x) - f(g(x)).
OVector composition_associator(const ParaLinearOperator& f, const ParaLinearOperator& g,
                               const OVector& x);

// [y,T,x] = sum_{i=1..7} e_i <y, B_{e_i}(T,x)>_R.
Octonion triple_associator(const OVector& y, const ParaLinearOperator& t, const OVector& x);

// Real transpose of the cached matrix; satisfies <x,T*y> = <Tx,y> + [y,T,x].
ParaLinearOperator adjoint(const ParaLinearOperator& t);

// side == left:  (r ⊙ T)(x) = r T(x) + B_r(T,x)
// side == right: (T ⊙ r)(x) = T(rx) - B_r(T,x)
ParaLinearOperator scalar_action(const ParaLinearOperator& t, const Octonion& r, Side side);

// Largest singular value of the cached matrix.
double operator_norm(const ParaLinearOperator& t);

// Re T = (5/12) T - (1/12) sum_i e_i ⊙ T ⊙ e_i; the O-linear part of T.
ParaLinearOperator op_real_part(const ParaLinearOperator& t);

double op_distance(const ParaLinearOperator& a, const ParaLinearOperator& b);

}  // namespace octopara
