#include "octopara/polarization.hpp"

#include <cmath>

namespace octopara {

namespace {

void require_real(const OVector& x, const char* who) {
    for (int k = 0; k < x.dim(); ++k)
        if (abs_max(x[k].im()) != 0.0)
            throw NotRealPartError(std::string(who) + " requires arguments in Re H");
}

}  // namespace

QuadraticFormProbe QuadraticFormProbe::from_operator(const ParaLinearOperator& t) {
    QuadraticFormProbe q;
    q.dim = t.dim();
    q.eval = [t](const OVector& x) { return inner_product(t.apply(x), x); };
    return q;
}

Octonion m_form(const QuadraticFormProbe& q, const OVector& x, const OVector& y) {
    require_same_dim(x, y);
    if (x.dim() != q.dim) throw DimensionMismatchError("probe dimension mismatch");
    return (q.eval(x + y) - q.eval(x - y)) * 0.5;
}

AbcTerms abc_terms(const QuadraticFormProbe& q, const OVector& x, const OVector& y, int i, int j) {
    require_real(x, "abc_terms");
    require_real(y, "abc_terms");
    const Octonion ei = Octonion::unit(i), ej = Octonion::unit(j);
    AbcTerms t;
    t.a = m_form(q, x, y) + ei * m_form(q, x, scale(y, ei.conj(), Side::right)) +
          m_form(q, x, scale(y, ej.conj(), Side::right)) * ej;
    if (i != j) {
        const Octonion mij = m_form(q, x, scale(y, (ei * ej).conj(), Side::right));
        t.b = (ei * mij) * ej;
        t.c = ei * (mij * ej);
    }
    return t;
}

Octonion reconstruct_re(const QuadraticFormProbe& q, const OVector& x, const OVector& y) {
    require_real(x, "reconstruct_re");
    require_real(y, "reconstruct_re");

    // m(x, y p) is linear in p, so eight m evaluations cover every term.
    Octonion m[8];
    for (int i = 0; i < 8; ++i)
        m[i] = m_form(q, x, scale(y, Octonion::unit(i), Side::right));
    auto m_at = [&](const Octonion& p) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r += m[i] * p[i];
        return r;
    };

    Octonion acc;
    Octonion sum_a;
    for (int i = 1; i < 8; ++i) {
        const Octonion ei = Octonion::unit(i);
        for (int j = 1; j < 8; ++j) {
            const Octonion ej = Octonion::unit(j);
            const Octonion a =
                m[0] + ei * m_at(ei.conj()) + m_at(ej.conj()) * ej;
            sum_a += a;
            if (i == j) continue;
            const Octonion mij = m_at((ei * ej).conj());
            const Octonion b = (ei * mij) * ej;
            const Octonion c = ei * (mij * ej);
            acc += a * 2.0 + b + c;
        }
    }
    return acc * (1.0 / 56.0) - sum_a * (1.0 / 98.0) - m[0] * 0.5;
}

ParaLinearOperator reconstruct_operator(const QuadraticFormProbe& q) {
    const int n = q.dim;
    // q_ab = <T u_a, u_b>. The core of the unique para-linear operator with
    // these Re H x Re H values is core[b][8a + i] = coeff_i(q_ab): the i = 0
    // entry is Re(T u_a)_b and f_R(u_a e_i) = -f_i(u_a) flips the conjugation
    // for i >= 1.
    Matrix core(n, 8 * n);
    for (int a = 0; a < n; ++a) {
        const OVector ua = OVector::basis(n, a);
        for (int b = 0; b < n; ++b) {
            const OVector ub = OVector::basis(n, b);
            const Octonion qab = reconstruct_re(q, ua, ub);
            for (int i = 0; i < 8; ++i) core(b, 8 * a + i) = qab[i];
        }
    }
    return ParaLinearOperator::from_core(std::move(core));
}

bool is_self_adjoint(const ParaLinearOperator& t, SelfAdjointMode mode, int samples, double tol,
                     uint64_t seed) {
    if (mode == SelfAdjointMode::exact) {
        const Matrix& m = t.matrix();
        return max_abs(m - m.transpose()) <= tol * std::max(1.0, max_abs(m));
    }
    const double scale = operator_norm(t);
    Rng rng(seed, 0x5a11ce);
    for (int s = 0; s < samples; ++s) {
        const OVector z = random_slice_paravector(t.dim(), rng).value();
        const Octonion qz = inner_product(t.apply(z), z);
        if (abs_max(qz.im()) > tol * std::max(scale, 1e-300) * z.norm_sq()) return false;
    }
    return true;
}

}  // namespace octopara
