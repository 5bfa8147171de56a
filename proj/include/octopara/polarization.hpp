#pragma once

#include <functional>

#include "octopara/operator.hpp"

namespace octopara {

// Black-box access to a quadratic form Q(x) = <Tx, x>. Reconstruction code
// only ever sees evaluations, never the operator behind them.
struct QuadraticFormProbe {
    int dim = 0;
    std::function<Octonion(const OVector&)> eval;

    static QuadraticFormProbe from_operator(const ParaLinearOperator& t);
};

// m(x,y) = (Q(x+y) - Q(x-y)) / 2 = <Tx,y> + <Ty,x>.
Octonion m_form(const QuadraticFormProbe& q, const OVector& x, const OVector& y);

struct AbcTerms {
    Octonion a, b, c;
};

// The auxiliary terms of the polarization identity for x, y in Re H:
//   A_ij = m(x,y) + e_i m(x, y conj(e_i)) + m(x, y conj(e_j)) e_j
//   B_ij = [e_i m(x, y conj(e_i e_j))] e_j
//   C_ij = e_i [m(x, y conj(e_i e_j)) e_j]
// B and C are only defined for i != j; for i == j they are zero by
// convention since the main formula uses them off-diagonal only.
AbcTerms abc_terms(const QuadraticFormProbe& q, const OVector& x, const OVector& y, int i, int j);

// <Tx,y> recovered from Q for x, y in Re H:
//   (1/56) sum_{i != j} (2A + B + C)_ij - (1/98) sum_{i,j} A_ij - m/2.
Octonion reconstruct_re(const QuadraticFormProbe& q, const OVector& x, const OVector& y);

// Full operator from the quadratic form: assembles <T u_a, u_b> over all
// basis pairs of Re H and rebuilds the core map.
ParaLinearOperator reconstruct_operator(const QuadraticFormProbe& q);

enum class SelfAdjointMode { exact, sampled };

// exact: symmetry of the cached matrix, max|M - M^T| <= tol * max(1, |M|).
// sampled: draws random slice paravectors z and requires
// |Im <Tz,z>| <= tol * |T| * |z|^2 for each.
bool is_self_adjoint(const ParaLinearOperator& t, SelfAdjointMode mode = SelfAdjointMode::exact,
                     int samples = 64, double tol = 1e-10, uint64_t seed = 0);

}  // namespace octopara
